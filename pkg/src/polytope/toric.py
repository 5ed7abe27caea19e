"""
Toric Betti Numbers Module

This module computes h-vectors of simple chamber polytopes two independent
ways: Morse counting of down-edges under a generic functional, and the f-to-h
transform of the face lattice (graded dimensions of the Stanley-Reisner ring
modulo a linear system of parameters).
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .rational_polytope import RationalPolytope, VertexEdgeGraph, vertices_and_edges
from ..lattice.rational import affine_rank
from ..utils.exceptions import DegenerateFunctional

logger = logging.getLogger(__name__)

FUNCTIONAL_ATTEMPTS = 8


@dataclass(frozen=True)
class HVector:
    """h_0..h_d of a simple polytope; h_i is the Betti number b_2i of its toric variety."""

    h: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.h)

    def is_palindromic(self) -> bool:
        return self.h == tuple(reversed(self.h))

    def betti(self, degree: int) -> int:
        """b_degree with odd Betti numbers zero."""
        if degree < 0 or degree % 2 or degree // 2 >= len(self.h):
            return 0
        return self.h[degree // 2]


def random_functional(dimension: int, rng: random.Random) -> Tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-10 ** 6, 10 ** 6), 10 ** 6 + 3) for _ in range(dimension))


def morse_h_vector(graph: VertexEdgeGraph, xi: Sequence[Fraction]) -> HVector:
    """
    Count vertices by number of decreasing edges under xi.

    Args:
        graph: Vertex-edge graph of a simple polytope
        xi: Linear functional on coset coordinates

    Returns:
        HVector

    Raises:
        NotSimple: If the graph is not simple
        DegenerateFunctional: If xi is constant on an edge
    """
    graph.require_simple()
    values = [sum((a * b for a, b in zip(xi, v)), Fraction(0)) for v in graph.vertices]
    h = [0] * (graph.dimension + 1)
    for v in range(len(graph.vertices)):
        down = 0
        for w in graph.neighbours(v):
            if values[w] == values[v]:
                raise DegenerateFunctional(
                    "functional is constant on an edge", {'vertices': [v, w]}
                )
            if values[w] < values[v]:
                down += 1
        h[down] += 1
    return HVector(tuple(h))


def h_vector(P: RationalPolytope, xi: Optional[Sequence[Fraction]] = None, seed: int = 0,
             graph: Optional[VertexEdgeGraph] = None) -> HVector:
    """
    h-vector of a simple polytope by Morse counting.

    Args:
        P: A nonempty polytope
        xi: Generic functional; sampled from seed when omitted
        seed: Seed for sampled functionals
        graph: Precomputed vertex-edge graph

    Returns:
        HVector

    Raises:
        NotSimple: If P is not simple
        DegenerateFunctional: If an explicit xi ties on an edge
    """
    graph = graph or vertices_and_edges(P)
    if xi is not None:
        return morse_h_vector(graph, xi)

    rng = random.Random(f"{seed}:functional")
    for attempt in range(FUNCTIONAL_ATTEMPTS):
        try:
            return morse_h_vector(graph, random_functional(P.ambient_dim, rng))
        except DegenerateFunctional:
            logger.warning(f"Functional tie on attempt {attempt}, re-sampling")
    raise DegenerateFunctional("no generic functional found", {'attempts': FUNCTIONAL_ATTEMPTS})


def face_vertex_sets(graph: VertexEdgeGraph) -> Set[FrozenSet[int]]:
    """
    Vertex sets of all nonempty faces.

    A face is cut out by the constraints tight on all of its vertices, so faces
    correspond to intersections of vertex tight sets.
    """
    tight_sets: Set[FrozenSet[int]] = set(graph.tight_sets)
    frontier = set(tight_sets)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in tight_sets:
                c = a & b
                if c not in tight_sets:
                    fresh.add(c)
        tight_sets |= fresh
        frontier = fresh

    faces = set()
    for t in tight_sets:
        faces.add(frozenset(v for v, tv in enumerate(graph.tight_sets) if t <= tv))
    return faces


def f_vector(graph: VertexEdgeGraph) -> Dict[int, int]:
    """Number of faces of each dimension."""
    counts: Dict[int, int] = {}
    for face in face_vertex_sets(graph):
        dim = affine_rank([graph.vertices[v] for v in sorted(face)])
        counts[dim] = counts.get(dim, 0) + 1
    return counts


def sr_dims_from_graph(graph: VertexEdgeGraph) -> Tuple[int, ...]:
    """
    Graded dimensions of the Stanley-Reisner ring modulo parameters.

    f_{j-1} of the dual simplicial sphere counts faces of codimension j, and
    h_i = sum_j (-1)^(i-j) C(d-j, d-i) f_{j-1}.
    """
    dim = graph.dimension
    faces = f_vector(graph)
    f = [faces.get(dim - j, 0) for j in range(dim + 1)]
    return tuple(
        sum((-1) ** (i - j) * comb(dim - j, dim - i) * f[j] for j in range(i + 1))
        for i in range(dim + 1)
    )


def sr_dims(P: RationalPolytope, graph: Optional[VertexEdgeGraph] = None) -> Tuple[int, ...]:
    """
    Stanley-Reisner graded dimensions of a chamber (intersection) polytope.

    Args:
        P: A nonempty polytope
        graph: Precomputed vertex-edge graph

    Returns:
        Tuple h_0..h_d'
    """
    return sr_dims_from_graph(graph or vertices_and_edges(P))


def expected_dimension(P: RationalPolytope) -> int:
    """(n - k) - |x - y|_1 for an intersection of two chambers."""
    if len(P.chambers) < 2:
        return P.ambient_dim
    x, y = P.chambers
    return P.ambient_dim - sum(abs(a - b) for a, b in zip(x, y))


def functional_independence(P: RationalPolytope, trials: int = 5, seed: int = 0) -> List[HVector]:
    """h-vectors under several sampled functionals; all equal for a simple polytope."""
    graph = vertices_and_edges(P)
    return [h_vector(P, seed=seed * 1000 + t, graph=graph) for t in range(trials)]
