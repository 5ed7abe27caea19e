"""
Analysis Context Module

Lazily computed objects shared by the commands of one run. Every stage is
built on first use and reused by later steps.
"""

import logging
from functools import cached_property
from typing import List, Optional

from ..algebra.dimensions import (
    HilbertMatrix,
    ToricIntersections,
    hilbert_matrix_H,
    hilbert_matrix_H_dual,
)
from ..algebra.presentation import QuadraticPresentation, build_H, build_H_dual
from ..arrangement.enumeration import (
    ChamberEnumeration,
    SmoothnessReport,
    enumerate_classes,
    is_smooth,
)
from ..arrangement.parameter import Parameter, make_parameter
from ..arrangement.periodic import PeriodicArrangement
from ..cli.spec_models import ProblemSpec
from ..lattice.embedding import TorusEmbedding, validate_embedding

logger = logging.getLogger(__name__)


class AnalysisContext:
    """
    One spec with its effective options and the stages derived from it.

    Args:
        spec: Validated problem spec
        truncation: Effective truncation degree
        seed: Effective perturbation seed
        window: Effective render window radius
    """

    def __init__(self, spec: ProblemSpec, truncation: Optional[int] = None,
                 seed: Optional[int] = None, window: Optional[int] = None):
        self.spec = spec
        self.truncation = spec.options.truncation if truncation is None else truncation
        self.seed = spec.options.seed if seed is None else seed
        self.window = spec.options.window if window is None else window

    @cached_property
    def embedding(self) -> TorusEmbedding:
        return validate_embedding(self.spec.rho, n=self.spec.n, k=self.spec.rank)

    @cached_property
    def parameter(self) -> Parameter:
        return make_parameter(self.spec.lam, self.spec.p)

    @cached_property
    def arrangement(self) -> PeriodicArrangement:
        return PeriodicArrangement(self.embedding, self.parameter, seed=self.seed)

    @cached_property
    def enumeration(self) -> ChamberEnumeration:
        return enumerate_classes(self.arrangement)

    @cached_property
    def smoothness(self) -> SmoothnessReport:
        report = is_smooth(self.enumeration)
        if not report.smooth:
            logger.warning(f"Parameter {list(self.parameter.lam)} is not smooth "
                           f"({report.reason.value})")
        return report

    @property
    def smooth(self) -> bool:
        return self.smoothness.smooth

    @cached_property
    def H(self) -> QuadraticPresentation:
        return build_H(self.enumeration, self.smooth)

    @cached_property
    def H_dual(self) -> QuadraticPresentation:
        return build_H_dual(self.enumeration, self.smooth)

    @cached_property
    def toric(self) -> ToricIntersections:
        return ToricIntersections(self.enumeration)

    @cached_property
    def hilbert_H(self) -> HilbertMatrix:
        return hilbert_matrix_H(self.enumeration, self.truncation)

    @cached_property
    def hilbert_H_dual(self) -> HilbertMatrix:
        return hilbert_matrix_H_dual(self.enumeration, self.truncation, self.toric)

    def prepare(self) -> None:
        """
        Build the stages every command depends on.

        Raises:
            RankDeficient, NonSaturated, NotInCoset: If the spec is unusable
        """
        arrangement = self.arrangement
        logger.info(f"Prepared arrangement n={arrangement.n}, k={arrangement.k}, p={arrangement.p} "
                    f"with {len(arrangement.bases)} bases")

    def warnings(self) -> List[str]:
        """Warning stamps of the stages built so far."""
        found = list(self.parameter.warnings)
        if 'enumeration' in self.__dict__:
            found.extend(self.enumeration.warnings)
        if 'smoothness' in self.__dict__ and not self.smooth:
            found.append('non_smooth_parameter')
        return found
