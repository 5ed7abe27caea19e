"""
Algebra Checks Module

Quadratic duality of the H and H! presentations, numerical Koszulity through
Hilbert-series reciprocity, and agreement between dimension routes.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .dimensions import HilbertMatrix
from .presentation import QuadraticPresentation
from ..lattice.rational import rational_rank
from ..utils.exceptions import DualityFailure, ReciprocityFailure

logger = logging.getLogger(__name__)


@dataclass
class PairDuality:
    """Relation dimensions between two classes, summed over path groups."""

    source: str
    target: str
    path_space: int = 0
    rank_H: int = 0
    rank_H_dual: int = 0
    orthogonal: bool = True

    @property
    def passed(self) -> bool:
        return self.orthogonal and self.rank_H + self.rank_H_dual == self.path_space

    def to_dict(self) -> Dict:
        return {
            'source': self.source,
            'target': self.target,
            'path_space': self.path_space,
            'rank_H': self.rank_H,
            'rank_H_dual': self.rank_H_dual,
            'passed': self.passed,
        }


@dataclass
class DualityReport:
    pairs: List[PairDuality]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.pairs)

    def failures(self) -> List[PairDuality]:
        return [p for p in self.pairs if not p.passed]

    def to_dict(self) -> Dict:
        return {'passed': self.passed, 'pairs': [p.to_dict() for p in self.pairs]}


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def quadratic_duality_check(H: QuadraticPresentation, H_dual: QuadraticPresentation,
                            raise_on_failure: bool = True) -> DualityReport:
    """
    Check that the H! relations are the annihilator of the H relations.

    The pairing matches c and d generators with the same source, coordinate and
    sign, so path-space rows in the same group pair coordinatewise.

    Args:
        H: Presentation of H
        H_dual: Presentation of H! on the same quiver
        raise_on_failure: Raise instead of only reporting

    Returns:
        DualityReport with one entry per class pair that has length-two paths

    Raises:
        DualityFailure: With the offending pairs
    """
    dual_groups = {g.key: g for g in H_dual.groups}
    pairs: Dict[Tuple[int, int], PairDuality] = {}
    for group in H.groups:
        partner = dual_groups.get(group.key)
        pair = pairs.setdefault(
            (group.source, group.target),
            PairDuality(source=H.labels[group.source], target=H.labels[group.target]),
        )
        size = len(group.paths)
        pair.path_space += size
        rows_H = H.path_relations(group)
        rows_dual = H_dual.path_relations(partner) if partner is not None else []
        if partner is None or partner.paths != group.paths:
            pair.orthogonal = False
            continue
        pair.rank_H += rational_rank(rows_H, size)
        pair.rank_H_dual += rational_rank(rows_dual, size)
        if any(_dot(a, b) != 0 for a in rows_H for b in rows_dual):
            pair.orthogonal = False

    report = DualityReport(pairs=[pairs[key] for key in sorted(pairs)])
    if report.passed:
        logger.info(f"Quadratic duality holds on {len(report.pairs)} class pairs")
    else:
        failed = [(p.source, p.target) for p in report.failures()]
        logger.warning(f"Quadratic duality fails on {failed}")
        if raise_on_failure:
            raise DualityFailure(f"duality fails on pairs {failed}", {'pairs': failed})
    return report


@dataclass
class ReciprocityReport:
    truncation: int
    failures: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict:
        return {'passed': self.passed, 'truncation': self.truncation,
                'failures': list(self.failures)}


def koszulity_check(H_dims: HilbertMatrix, H_dual_dims: HilbertMatrix, truncation: int,
                    raise_on_failure: bool = True) -> ReciprocityReport:
    """
    Euler-form reciprocity sum_{z, j<=q} (-1)^j dim(e_x H! e_z)_j dim(1_z H 1_y)_(q-j) = [x=y][q=0].

    Args:
        H_dims: HilbertMatrix of H
        H_dual_dims: HilbertMatrix of H! on the same classes
        truncation: Highest degree checked
        raise_on_failure: Raise instead of only reporting

    Returns:
        ReciprocityReport

    Raises:
        ReciprocityFailure: With the first offending (x, y, q)
        ValueError: If a matrix is truncated below the requested degree
    """
    if min(H_dims.truncation, H_dual_dims.truncation) < truncation:
        raise ValueError("Hilbert matrices are truncated below the requested degree")

    labels = H_dims.labels
    size = len(labels)
    report = ReciprocityReport(truncation=truncation)
    for x in range(size):
        for y in range(size):
            for q in range(truncation + 1):
                total = 0
                for z in range(size):
                    ext = H_dual_dims.entries[x][z]
                    hom = H_dims.entries[z][y]
                    total += sum((-1) ** j * ext[j] * hom[q - j] for j in range(q + 1))
                expected = 1 if (x == y and q == 0) else 0
                if total != expected:
                    report.failures.append({'source': labels[x], 'target': labels[y],
                                            'degree': q, 'value': total})

    if report.passed:
        logger.info(f"Hilbert-series reciprocity holds up to degree {truncation}")
    else:
        logger.warning(f"Reciprocity fails at {report.failures[0]}")
        if raise_on_failure:
            first = report.failures[0]
            raise ReciprocityFailure(
                f"reciprocity fails at ({first['source']}, {first['target']}, {first['degree']})",
                first,
            )
    return report


def compare_routes(*matrices: HilbertMatrix) -> Dict:
    """Entrywise agreement of several HilbertMatrix routes against the first."""
    reference = matrices[0]
    mismatches = []
    for other in matrices[1:]:
        mismatches.extend(reference.differences(other))
    return {
        'routes': [m.route for m in matrices],
        'agree': not mismatches,
        'mismatches': mismatches,
    }
