"""
Chamber Enumeration Module

This module enumerates the classes of nonempty chambers modulo t-perp
translation (the chambers of the toroidal arrangement), builds the adjacency
quiver on them and decides smoothness of the parameter.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from .parameter import make_parameter
from .periodic import PeriodicArrangement
from ..lattice.embedding import TorusEmbedding
from ..lattice.normal_forms import solve_integer
from ..utils.exceptions import DegeneratePerturbation

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]

SMOOTHNESS_PERTURBATIONS = 4


def class_label(index: int) -> str:
    """A, B, C, ... then X26, X27, ..."""
    return chr(ord('A') + index) if index < 26 else f"X{index}"


@dataclass(frozen=True)
class ChamberClass:
    """
    A class of nonempty chambers modulo t-perp.

    Attributes:
        index: Position in lexicographic key order
        key: Canonical Hermite-reduced representative
        representative: Chamber used for all local computations (equal to key)
        witness: An integer weight in the representative chamber
        label: Short display name
    """

    index: int
    key: IntVector
    representative: IntVector
    witness: Optional[IntVector]
    label: str


@dataclass(frozen=True)
class Adjacency:
    """Arrow between classes: representative of source shifted by sign * e_coordinate."""

    source: int
    target: int
    coordinate: int
    sign: int

    @property
    def name(self) -> str:
        return f"c{self.coordinate + 1}{'+' if self.sign > 0 else '-'}@{self.source}"


@dataclass(frozen=True)
class AdjacencyGraph:
    """Adjacency quiver on chamber classes."""

    nodes: Tuple[IntVector, ...]
    edges: Tuple[Adjacency, ...]

    def out_edges(self, source: int) -> List[Adjacency]:
        return [e for e in self.edges if e.source == source]

    def alpha(self, source: int, coordinate: int) -> List[Adjacency]:
        """Arrows leaving source across a hyperplane of the given coordinate."""
        return [e for e in self.edges if e.source == source and e.coordinate == coordinate]

    def find(self, source: int, coordinate: int, sign: int) -> Optional[Adjacency]:
        for e in self.edges:
            if e.source == source and e.coordinate == coordinate and e.sign == sign:
                return e
        return None

    def multiplicity(self, source: int, target: int) -> int:
        return sum(1 for e in self.edges if e.source == source and e.target == target)


class ChamberEnumeration:
    """Classes of Lambda(lambda) with their adjacency graph."""

    def __init__(self, arrangement: PeriodicArrangement, classes: Sequence[ChamberClass],
                 graph: AdjacencyGraph, warnings: Sequence[str] = ()):
        self.arrangement = arrangement
        self.classes = tuple(classes)
        self.graph = graph
        self.warnings = tuple(warnings)
        self._by_pairing = {arrangement.embedding.pair(c.key): c.index for c in self.classes}

    def __len__(self) -> int:
        return len(self.classes)

    def index_of(self, x: Sequence[int]) -> Optional[int]:
        """Class index of a chamber, or None when its class is not nonempty."""
        return self._by_pairing.get(self.arrangement.embedding.pair(x))

    def keys(self) -> Set[IntVector]:
        return {c.key for c in self.classes}

    def alpha_size_two(self) -> List[Tuple[int, int]]:
        """(class, coordinate) pairs whose chamber has neighbours on both sides of a coordinate."""
        pairs = []
        for c in self.classes:
            for i in range(self.arrangement.n):
                if len(self.graph.alpha(c.index, i)) == 2:
                    pairs.append((c.index, i))
        return pairs


def _neighbours(x: IntVector) -> List[Tuple[IntVector, int, int]]:
    found = []
    for i in range(len(x)):
        for sign in (1, -1):
            y = list(x)
            y[i] += sign
            found.append((tuple(y), i, sign))
    return found


def _bfs_keys(arrangement: PeriodicArrangement, seed: IntVector,
              nonempty: Callable[[IntVector], bool]) -> Tuple[Set[IntVector], List[Tuple]]:
    lattices = arrangement.lattices
    start = lattices.class_key(seed)
    keys = {start}
    queue = deque([start])
    arrows = []
    while queue:
        x = queue.popleft()
        for y, i, sign in _neighbours(x):
            if not nonempty(y):
                continue
            key = lattices.class_key(y)
            arrows.append((x, key, i, sign))
            if key not in keys:
                keys.add(key)
                queue.append(key)
    return keys, arrows


def sweep_class_keys(arrangement: PeriodicArrangement) -> Set[IntVector]:
    """
    All nonempty classes by exhausting the bounded set of possible rho^T x.

    A nonempty chamber has rho^T x = (lambda - rho^T r) / p for some r in [0, p)^n,
    which bounds every coordinate of rho^T x.
    """
    embedding, p = arrangement.embedding, arrangement.p
    ranges = []
    for j in range(embedding.k):
        positive = sum(max(0, row[j]) for row in embedding.rho) * (p - 1)
        negative = sum(max(0, -row[j]) for row in embedding.rho) * (p - 1)
        lam = arrangement.lam[j]
        low = -((positive - lam) // p)
        high = (lam + negative) // p
        ranges.append(range(low, high + 1))

    keys = set()
    rho_t = embedding.rho_transpose()
    for v in product(*ranges):
        x = solve_integer(rho_t, v)
        if x is None:
            continue
        if not arrangement.real_with_resampling(x):
            continue
        if arrangement.is_nonempty_integral(x):
            keys.add(arrangement.lattices.class_key(x))
    return keys


def enumerate_classes(arrangement: PeriodicArrangement,
                      seed_chamber: Optional[Sequence[int]] = None,
                      verify: bool = True) -> ChamberEnumeration:
    """
    Enumerate the classes of nonempty chambers and their adjacency.

    Args:
        arrangement: The periodic arrangement
        seed_chamber: Starting chamber; defaults to the chamber of the coset basepoint
        verify: Cross-check the BFS against an exhaustive sweep

    Returns:
        ChamberEnumeration with classes ordered by key

    Raises:
        ValueError: If the seed chamber is empty
    """
    if seed_chamber is None:
        seed = arrangement.weight_to_chamber(arrangement.basepoint)
    else:
        seed = tuple(int(v) for v in seed_chamber)
    if not arrangement.is_nonempty_integral(seed):
        raise ValueError(f"seed chamber {list(seed)} is empty")

    keys, arrows = _bfs_keys(arrangement, seed, arrangement.is_nonempty_integral)
    warnings: List[str] = []

    if verify:
        swept = sweep_class_keys(arrangement)
        missing = swept - keys
        if missing:
            logger.warning(f"BFS missed {len(missing)} classes; merging sweep results")
            warnings.append('bfs_incomplete')
            for key in sorted(missing):
                more_keys, more_arrows = _bfs_keys(
                    arrangement, key, arrangement.is_nonempty_integral
                )
                keys |= more_keys
                arrows.extend(more_arrows)

    ordered = sorted(keys)
    index = {key: i for i, key in enumerate(ordered)}
    classes = [
        ChamberClass(index=i, key=key, representative=key,
                     witness=arrangement.chamber(key).witness, label=class_label(i))
        for i, key in enumerate(ordered)
    ]
    edges = sorted(
        {Adjacency(source=index[x], target=index[y], coordinate=i, sign=sign)
         for x, y, i, sign in arrows},
        key=lambda e: (e.source, e.coordinate, -e.sign),
    )
    graph = AdjacencyGraph(nodes=tuple(ordered), edges=tuple(edges))
    logger.info(f"Enumerated {len(classes)} chamber classes with {len(edges)} arrows")

    enumeration = ChamberEnumeration(arrangement, classes, graph, warnings)
    doubles = enumeration.alpha_size_two()
    if doubles:
        logger.info(f"Chambers with neighbours on both sides of a coordinate: {doubles}")
    return enumeration


def enumerate_real_classes(arrangement: PeriodicArrangement,
                           eps: Sequence[Fraction]) -> Set[IntVector]:
    """
    Class keys of chambers whose perturbed open box meets the real coset.

    Args:
        arrangement: The periodic arrangement
        eps: Perturbation vector (entries in (-1, 0) or (0, 1))

    Returns:
        Set of class keys

    Raises:
        DegeneratePerturbation: If eps is not generic for some visited chamber
    """
    seed = arrangement.real_seed(eps)
    keys, _ = _bfs_keys(arrangement, seed, lambda y: arrangement.is_nonempty_real(y, eps))
    return keys


class SmoothnessReason(str, Enum):
    """Which test decided smoothness."""

    BASIS_COUNT = 'basis_count'
    PERTURBATION_CHANGED = 'perturbation_changed'
    PERTURBATION_STABLE = 'perturbation_stable'


@dataclass(frozen=True)
class SmoothnessReport:
    """Outcome of the smoothness test."""

    smooth: bool
    reason: SmoothnessReason
    class_count: int
    bases_count: int
    perturbed_counts: Tuple[int, ...] = field(default=())
    disagreement: bool = False

    @property
    def message(self) -> str:
        text = f"{self.class_count} classes, {self.bases_count} bases"
        if self.reason == SmoothnessReason.PERTURBATION_CHANGED:
            text += f"; perturbed class counts {list(self.perturbed_counts)}"
        elif self.reason == SmoothnessReason.PERTURBATION_STABLE:
            text += (f"; {len(self.perturbed_counts)} perturbations keep the class set, "
                     "count and bases disagree")
        return text

    def to_dict(self) -> Dict:
        return {
            'smooth': self.smooth,
            'reason': self.reason.value,
            'class_count': self.class_count,
            'bases_count': self.bases_count,
            'perturbed_counts': list(self.perturbed_counts),
            'disagreement': self.disagreement,
            'message': self.message,
        }


def perturbed_class_sets(arrangement: PeriodicArrangement, count: int,
                         signed: bool = True) -> List[Set[IntVector]]:
    """Real class sets for `count` generic perturbations lambda' = lambda + rho^T eps."""
    results = []
    for trial in range(count):
        for attempt in range(8):
            eps = arrangement.sample_eps(f"smooth-{trial}", attempt, signed=signed)
            try:
                results.append(enumerate_real_classes(arrangement, eps))
                break
            except DegeneratePerturbation:
                logger.warning(f"Degenerate perturbation in trial {trial}, re-sampling")
    return results


def is_smooth(enumeration: ChamberEnumeration,
              perturbations: int = SMOOTHNESS_PERTURBATIONS) -> SmoothnessReport:
    """
    Decide whether lambda is smooth.

    The parameter is smooth when the number of classes equals the number of
    bases. Otherwise the integral class set is compared with the real class
    sets of several generic perturbations; agreement there while the count
    falls short is flagged as a disagreement.

    Args:
        enumeration: Output of enumerate_classes
        perturbations: Number of perturbed parameters to compare

    Returns:
        SmoothnessReport
    """
    arrangement = enumeration.arrangement
    class_count = len(enumeration)
    bases_count = len(arrangement.bases)
    if class_count == bases_count:
        return SmoothnessReport(True, SmoothnessReason.BASIS_COUNT, class_count, bases_count)

    integral = enumeration.keys()
    perturbed = perturbed_class_sets(arrangement, perturbations)
    counts = tuple(len(s) for s in perturbed)
    if any(s != integral for s in perturbed):
        return SmoothnessReport(False, SmoothnessReason.PERTURBATION_CHANGED, class_count,
                                bases_count, counts)

    report = SmoothnessReport(False, SmoothnessReason.PERTURBATION_STABLE, class_count,
                              bases_count, counts, disagreement=True)
    logger.warning(f"Reporting non-smooth: {report.message}")
    return report


def residue_sweep(embedding: TorusEmbedding, p: int, seed: int = 0) -> List[Dict]:
    """
    Class counts and smoothness over a full residue system of lambda modulo p.

    Args:
        embedding: A validated embedding
        p: Period
        seed: Perturbation seed

    Returns:
        One row per lambda in [0, p)^k
    """
    rows = []
    for lam in product(range(p), repeat=embedding.k):
        arrangement = PeriodicArrangement(embedding, make_parameter(lam, p), seed=seed)
        enumeration = enumerate_classes(arrangement, verify=False)
        report = is_smooth(enumeration)
        rows.append({
            'lambda': list(lam),
            'classes': len(enumeration),
            'smooth': report.smooth,
            'reason': report.reason.value,
            'disagreement': report.disagreement,
        })
    logger.info(f"Residue sweep over {len(rows)} parameters finished")
    return rows


def real_class_count(arrangement: PeriodicArrangement) -> int:
    """|Lambda-bar^R(lambda)| for the arrangement's default positive perturbation."""
    for attempt in range(8):
        eps = arrangement.default_eps if attempt == 0 else arrangement.sample_eps('real', attempt)
        try:
            return len(enumerate_real_classes(arrangement, eps))
        except DegeneratePerturbation:
            logger.warning("Degenerate perturbation while counting real classes, re-sampling")
    raise DegeneratePerturbation("no generic perturbation found for the real class count")
