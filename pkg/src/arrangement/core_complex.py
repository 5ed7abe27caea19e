"""
Core Complex Module

Per-class polytope data for an enumeration: the toric component of each chamber
class, pairwise intersections with their expected codimension, and the vertex
incidence count against the number of bases.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .enumeration import ChamberEnumeration
from ..polytope.rational_polytope import polytope, vertices_and_edges
from ..polytope.toric import HVector, expected_dimension, h_vector, sr_dims_from_graph
from ..utils.exceptions import EmptyIntersection, NotSimple

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


@dataclass
class ComponentSummary:
    """Toric component of one chamber (or of a chamber intersection)."""

    chambers: Tuple[IntVector, ...]
    vertex_count: int
    dimension: int
    expected_dimension: int
    simple: bool
    h: Optional[HVector] = None
    sr: Optional[Tuple[int, ...]] = None

    @property
    def oracle_agrees(self) -> bool:
        return self.h is not None and self.sr is not None and self.h.h == self.sr

    def to_dict(self) -> Dict:
        return {
            'chambers': [list(c) for c in self.chambers],
            'vertices': self.vertex_count,
            'dimension': self.dimension,
            'expected_dimension': self.expected_dimension,
            'simple': self.simple,
            'h_vector': list(self.h.h) if self.h else None,
            'sr_dims': list(self.sr) if self.sr is not None else None,
        }


def summarize(enumeration: ChamberEnumeration, x: IntVector,
              y: Optional[IntVector] = None) -> Optional[ComponentSummary]:
    """
    Polytope summary of a chamber or a chamber intersection.

    Returns:
        ComponentSummary, or None when the closed chambers do not meet
    """
    arrangement = enumeration.arrangement
    try:
        P = polytope(arrangement, x, y)
    except EmptyIntersection:
        return None
    graph = vertices_and_edges(P)
    summary = ComponentSummary(
        chambers=P.chambers,
        vertex_count=len(graph.vertices),
        dimension=graph.dimension,
        expected_dimension=expected_dimension(P),
        simple=graph.simple,
    )
    try:
        summary.h = h_vector(P, seed=arrangement.seed, graph=graph)
        summary.sr = sr_dims_from_graph(graph)
    except NotSimple:
        logger.warning(f"Skipping Betti numbers of non-simple polytope {P.chambers}")
    return summary


@dataclass
class CoreComplex:
    """Components of every chamber class and the vertex incidence check."""

    components: List[ComponentSummary]
    bases_count: int
    ambient_dim: int
    pairwise: Dict[Tuple[int, int], List[ComponentSummary]] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)

    def intersection_dimensions(self, x: int, y: int) -> List[int]:
        """Dimensions of the meetings of class x with distinct lifts of class y."""
        key = (x, y) if x <= y else (y, x)
        return [s.dimension for s in self.pairwise.get(key, [])]

    @property
    def codim_profile(self) -> Dict[int, int]:
        counts = Counter(
            self.ambient_dim - s.dimension for found in self.pairwise.values() for s in found
        )
        return dict(sorted(counts.items()))

    @property
    def vertex_total(self) -> int:
        return sum(c.vertex_count for c in self.components)

    @property
    def expected_vertex_total(self) -> int:
        return (2 ** self.ambient_dim) * self.bases_count

    @property
    def incidence_holds(self) -> bool:
        return self.vertex_total == self.expected_vertex_total

    def to_dict(self) -> Dict:
        return {
            'components': [c.to_dict() for c in self.components],
            'pairwise': [
                {'from': x + 1, 'to': y + 1,
                 'dimensions': [s.dimension for s in found]}
                for (x, y), found in sorted(self.pairwise.items())
            ],
            'codim_profile': {str(c): n for c, n in self.codim_profile.items()},
            'vertex_total': self.vertex_total,
            'expected_vertex_total': self.expected_vertex_total,
            'incidence_holds': self.incidence_holds,
            'warnings': list(self.warnings),
        }


def core_complex(enumeration: ChamberEnumeration) -> CoreComplex:
    """
    Summaries of the closed chamber of every class and of every class pair.

    Pairs are recorded by the meetings of a class representative with the
    lifts of the other class differing by at most one in each coordinate,
    the representative itself excluded.

    For smooth lambda every vertex of the toroidal arrangement is a basis and
    is a corner of 2^(n-k) chambers, so the vertex counts add up to
    2^(n-k) |bases|.

    Args:
        enumeration: Output of enumerate_classes

    Returns:
        CoreComplex
    """
    arrangement = enumeration.arrangement
    components = []
    warnings = []
    for c in enumeration.classes:
        summary = summarize(enumeration, c.representative)
        if summary is None:
            continue
        if summary.h is not None and not summary.oracle_agrees:
            warnings.append(f"h_vector_mismatch:{c.label}")
        components.append(summary)

    pairwise = {}
    for i, source in enumerate(enumeration.classes):
        for j in range(i, len(enumeration)):
            target = enumeration.classes[j]
            found = []
            for lift in arrangement.adjacent_lifts(source.representative, target.representative):
                if lift == source.representative:
                    continue
                summary = summarize(enumeration, source.representative, lift)
                if summary is not None:
                    found.append(summary)
            pairwise[(i, j)] = found
            logger.debug(f"{source.label} meets {len(found)} lifts of {target.label}")

    complex_ = CoreComplex(components=components, bases_count=len(arrangement.bases),
                           ambient_dim=arrangement.d, pairwise=pairwise, warnings=warnings)
    if not complex_.incidence_holds:
        logger.info(
            f"Vertex total {complex_.vertex_total} differs from "
            f"2^{arrangement.d} x {len(arrangement.bases)}"
        )
    return complex_
