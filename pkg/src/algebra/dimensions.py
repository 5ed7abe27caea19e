"""
Graded Dimensions Module

Closed-form Hom dimensions of H, toric Ext dimensions of H!, and the
HilbertMatrix container shared with the truncation oracle.
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Tuple

from ..arrangement.enumeration import ChamberEnumeration
from ..arrangement.parameter import taxicab
from ..polytope.rational_polytope import polytope, vertices_and_edges
from ..polytope.toric import HVector, h_vector
from ..utils.exceptions import EmptyIntersection, NotSimple

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]

ROUTE_CLOSED_FORM = 'closed-form'
ROUTE_TORIC = 'toric'
ROUTE_ORACLE = 'oracle'


@dataclass
class HilbertMatrix:
    """
    Graded dimensions entries[x][y][q] for every ordered pair of classes.

    Attributes:
        labels: Class labels
        truncation: Highest degree Q
        entries: Nested lists indexed by source class, target class, degree
        route: Which computation produced the numbers
        algebra: 'H' or 'H!'
    """

    labels: List[str]
    truncation: int
    entries: List[List[List[int]]]
    route: str
    algebra: str
    warnings: List[str] = field(default_factory=list)

    @classmethod
    def zeros(cls, labels: List[str], truncation: int, route: str, algebra: str) -> "HilbertMatrix":
        size = len(labels)
        entries = [[[0] * (truncation + 1) for _ in range(size)] for _ in range(size)]
        return cls(labels=list(labels), truncation=truncation, entries=entries, route=route,
                   algebra=algebra)

    def entry(self, x: int, y: int) -> List[int]:
        return self.entries[x][y]

    def differences(self, other: "HilbertMatrix") -> List[Dict]:
        """Cells where two matrices disagree, up to the smaller truncation."""
        top = min(self.truncation, other.truncation)
        found = []
        for x in range(len(self.labels)):
            for y in range(len(self.labels)):
                for q in range(top + 1):
                    if self.entries[x][y][q] != other.entries[x][y][q]:
                        found.append({
                            'source': self.labels[x],
                            'target': self.labels[y],
                            'degree': q,
                            self.route: self.entries[x][y][q],
                            other.route: other.entries[x][y][q],
                        })
        return found

    def to_dict(self) -> Dict:
        return {
            'algebra': self.algebra,
            'route': self.route,
            'truncation': self.truncation,
            'labels': list(self.labels),
            'entries': {
                f"{self.labels[x]},{self.labels[y]}": list(self.entries[x][y])
                for x in range(len(self.labels))
                for y in range(len(self.labels))
            },
            'warnings': list(self.warnings),
        }


def monomial_count(j: int, d: int) -> int:
    """Number of degree-j monomials in d variables."""
    if j < 0:
        return 0
    if d == 0:
        return 1 if j == 0 else 0
    return comb(j + d - 1, d - 1)


def hom_dims_H(enumeration: ChamberEnumeration, x: int, y: int, truncation: int) -> List[int]:
    """
    Closed-form graded dimensions of 1_x H-bar 1_y.

    Each lift u of the class y contributes a free rank-one module over Sym(g)
    generated in degree |x - u|_1, with deg s_i = 2.

    Args:
        enumeration: Output of enumerate_classes
        x: Source class index
        y: Target class index
        truncation: Highest degree

    Returns:
        Dimensions for degrees 0..truncation
    """
    arrangement = enumeration.arrangement
    source = enumeration.classes[x].representative
    target = enumeration.classes[y].representative
    dims = [0] * (truncation + 1)
    for lift in arrangement.relative_lifts(source, target, truncation):
        r = taxicab(source, lift)
        for q in range(r, truncation + 1, 2):
            dims[q] += monomial_count((q - r) // 2, arrangement.d)
    return dims


class ToricIntersections:
    """Memoized h-vectors of closed chamber intersections."""

    def __init__(self, enumeration: ChamberEnumeration):
        self.enumeration = enumeration
        self.arrangement = enumeration.arrangement
        self._cache: Dict[Tuple[IntVector, IntVector], Optional[HVector]] = {}
        self.skipped: List[Tuple[IntVector, IntVector]] = []

    def h(self, x: IntVector, u: IntVector) -> Optional[HVector]:
        """h-vector of the closure of x meeting the closure of u, None when they miss."""
        key = (x, u)
        if key not in self._cache:
            try:
                P = polytope(self.arrangement, x, u)
                self._cache[key] = h_vector(P, seed=self.arrangement.seed,
                                            graph=vertices_and_edges(P))
            except EmptyIntersection:
                self._cache[key] = None
            except NotSimple:
                logger.warning(f"Intersection of {x} and {u} is not simple; no Betti numbers")
                self.skipped.append(key)
                self._cache[key] = None
        return self._cache[key]

    def meeting_lifts(self, x: int, y: int) -> List[Tuple[IntVector, HVector]]:
        """Lifts u of class y whose closed chamber meets the closed representative of x."""
        source = self.enumeration.classes[x].representative
        target = self.enumeration.classes[y].representative
        found = []
        for lift in self.arrangement.adjacent_lifts(source, target):
            h = self.h(source, lift)
            if h is not None:
                found.append((lift, h))
        return found


def ext_dims_from_toric(enumeration: ChamberEnumeration, x: int, y: int, truncation: int,
                        toric: Optional[ToricIntersections] = None) -> List[int]:
    """
    Graded dimensions of e_x H!-bar e_y from Betti numbers of chamber intersections.

    Args:
        enumeration: Output of enumerate_classes
        x: Source class index
        y: Target class index
        truncation: Highest degree
        toric: Shared memo of intersection h-vectors

    Returns:
        Dimensions for degrees 0..truncation
    """
    toric = toric or ToricIntersections(enumeration)
    source = enumeration.classes[x].representative
    dims = [0] * (truncation + 1)
    for lift, h in toric.meeting_lifts(x, y):
        r = taxicab(source, lift)
        for q in range(r, truncation + 1):
            dims[q] += h.betti(q - r)
    return dims


def hilbert_matrix_H(enumeration: ChamberEnumeration, truncation: int) -> HilbertMatrix:
    """Closed-form HilbertMatrix of H-bar."""
    labels = [c.label for c in enumeration.classes]
    matrix = HilbertMatrix.zeros(labels, truncation, ROUTE_CLOSED_FORM, 'H')
    for x in range(len(labels)):
        for y in range(len(labels)):
            matrix.entries[x][y] = hom_dims_H(enumeration, x, y, truncation)
    return matrix


def hilbert_matrix_H_dual(enumeration: ChamberEnumeration, truncation: int,
                          toric: Optional[ToricIntersections] = None) -> HilbertMatrix:
    """Toric HilbertMatrix of H!-bar."""
    toric = toric or ToricIntersections(enumeration)
    labels = [c.label for c in enumeration.classes]
    matrix = HilbertMatrix.zeros(labels, truncation, ROUTE_TORIC, 'H!')
    for x in range(len(labels)):
        for y in range(len(labels)):
            matrix.entries[x][y] = ext_dims_from_toric(enumeration, x, y, truncation, toric)
    if toric.skipped:
        matrix.warnings.append('non_simple_intersections')
    return matrix


def purity_violations(enumeration: ChamberEnumeration, matrix: HilbertMatrix,
                      toric: Optional[ToricIntersections] = None) -> List[Dict]:
    """
    Nonzero H! dimensions not explained by an intersecting lift of matching parity.

    A degree q is allowed for (x, y) when some lift u meeting x has
    |x - u|_1 <= q and |x - u|_1 = q mod 2.
    """
    toric = toric or ToricIntersections(enumeration)
    violations = []
    for x in range(len(matrix.labels)):
        source = enumeration.classes[x].representative
        for y in range(len(matrix.labels)):
            distances = {taxicab(source, lift) for lift, _ in toric.meeting_lifts(x, y)}
            for q, value in enumerate(matrix.entries[x][y]):
                if value and not any(r <= q and (q - r) % 2 == 0 for r in distances):
                    violations.append({'source': matrix.labels[x], 'target': matrix.labels[y],
                                       'degree': q, 'value': value})
    return violations
