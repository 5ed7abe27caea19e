"""
Rational Polytope Module

This module builds closed chamber polytopes and their pairwise intersections in
coset coordinates a = a0 + N^T z, and enumerates their vertices and edges
exactly.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..arrangement.periodic import PeriodicArrangement
from ..lattice.rational import affine_rank, rational_rank, solve_square
from ..utils.exceptions import EmptyIntersection, NotSimple

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]
RatVector = Tuple[Fraction, ...]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Constraint:
    """normal . z <= bound, coming from the lower or upper side of coordinate i."""

    coordinate: int
    side: str
    normal: RatVector
    bound: Fraction

    @property
    def name(self) -> str:
        return f"{self.side}{self.coordinate + 1}"


@dataclass(frozen=True)
class RationalPolytope:
    """
    H-representation of a closed chamber box (or an intersection of two) on the coset.

    Attributes:
        ambient_dim: Dimension d = n - k of the coset coordinates z
        basepoint: a0 with rho^T a0 = lambda
        kernel: n rows; row i is the image of e_i, so a_i = a0_i + kernel[i] . z
        lower: Lower bounds on a_i
        upper: Upper bounds on a_i
        chambers: The chamber indices whose closures were intersected
    """

    ambient_dim: int
    basepoint: IntVector
    kernel: Tuple[IntVector, ...]
    lower: RatVector
    upper: RatVector
    chambers: Tuple[IntVector, ...]

    @property
    def n(self) -> int:
        return len(self.lower)

    @cached_property
    def constraints(self) -> List[Constraint]:
        found = []
        for i in range(self.n):
            row = tuple(Fraction(v) for v in self.kernel[i])
            found.append(Constraint(i, 'upper', row, self.upper[i] - self.basepoint[i]))
            found.append(Constraint(i, 'lower', tuple(-v for v in row),
                                    self.basepoint[i] - self.lower[i]))
        return found

    def weight(self, z: Sequence[Fraction]) -> RatVector:
        """Map coset coordinates back to a point a of the coset."""
        return tuple(
            self.basepoint[i] + sum((Fraction(k) * c for k, c in zip(self.kernel[i], z)),
                                    Fraction(0))
            for i in range(self.n)
        )

    def contains(self, z: Sequence[Fraction]) -> bool:
        a = self.weight(z)
        return all(lo <= v <= hi for v, lo, hi in zip(a, self.lower, self.upper))

    def tight(self, z: Sequence[Fraction]) -> FrozenSet[int]:
        """Indices into `constraints` that hold with equality at z."""
        indices = set()
        for index, c in enumerate(self.constraints):
            if sum((a * b for a, b in zip(c.normal, z)), Fraction(0)) == c.bound:
                indices.add(index)
        return frozenset(indices)


def polytope(arrangement: PeriodicArrangement, x: Sequence[int],
             y: Optional[Sequence[int]] = None) -> RationalPolytope:
    """
    Closed polytope of chamber x, or of the intersection with chamber y.

    The closure of chamber x is px_i - 1/2 <= a_i <= px_i + p - 1/2 on the coset.

    Args:
        arrangement: The periodic arrangement
        x: Chamber index
        y: Optional second chamber index

    Returns:
        RationalPolytope

    Raises:
        EmptyIntersection: If the closed polytope has no real point
    """
    p = arrangement.p
    chambers = [tuple(int(v) for v in x)]
    if y is not None:
        chambers.append(tuple(int(v) for v in y))

    lower = tuple(max(Fraction(p * c[i]) - HALF for c in chambers) for i in range(arrangement.n))
    upper = tuple(min(Fraction(p * c[i] + p) - HALF for c in chambers)
                  for i in range(arrangement.n))
    if not arrangement.closed_box_meets_coset(lower, upper):
        raise EmptyIntersection(
            f"closed chambers {[list(c) for c in chambers]} do not meet on the coset",
            {'chambers': [list(c) for c in chambers]},
        )

    kernel = tuple(tuple(col) for col in arrangement.lattices.kernel_columns())
    return RationalPolytope(
        ambient_dim=arrangement.d,
        basepoint=arrangement.basepoint,
        kernel=kernel,
        lower=lower,
        upper=upper,
        chambers=tuple(chambers),
    )


@dataclass
class VertexEdgeGraph:
    """
    Vertices of a polytope with their tight constraints, and its edges.

    Attributes:
        vertices: Coset coordinates of each vertex
        tight_sets: Tight constraint indices per vertex
        edges: Pairs of vertex indices
        dimension: Affine dimension of the polytope
        non_simple: Vertices whose degree exceeds the dimension
    """

    vertices: List[RatVector]
    tight_sets: List[FrozenSet[int]]
    edges: List[Tuple[int, int]]
    dimension: int
    non_simple: List[int] = field(default_factory=list)

    @property
    def simple(self) -> bool:
        return not self.non_simple

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbours(self, v: int) -> List[int]:
        return [b if a == v else a for a, b in self.edges if v in (a, b)]

    def require_simple(self) -> None:
        """
        Raises:
            NotSimple: If some vertex has more incident edges than the dimension
        """
        if self.non_simple:
            raise NotSimple(
                f"vertices {self.non_simple} have degree above {self.dimension}",
                {'vertices': self.non_simple, 'dimension': self.dimension},
            )


def _edge_between(P: RationalPolytope, t1: FrozenSet[int], t2: FrozenSet[int]) -> bool:
    common = t1 & t2
    normals = [P.constraints[i].normal for i in common]
    return rational_rank(normals, P.ambient_dim) == P.ambient_dim - 1


def vertices_and_edges(P: RationalPolytope) -> VertexEdgeGraph:
    """
    Enumerate vertices by solving every d-subset of constraints, then edges by shared tight sets.

    Args:
        P: A nonempty polytope

    Returns:
        VertexEdgeGraph; non-simple vertices are listed, not raised
    """
    d = P.ambient_dim
    constraints = P.constraints

    if d == 0:
        return VertexEdgeGraph(vertices=[()], tight_sets=[P.tight(())], edges=[], dimension=0)

    seen: Dict[RatVector, FrozenSet[int]] = {}
    for subset in combinations(range(len(constraints)), d):
        rows = [constraints[i].normal for i in subset]
        z = solve_square(rows, [constraints[i].bound for i in subset])
        if z is None or z in seen or not P.contains(z):
            continue
        seen[z] = P.tight(z)

    vertices = sorted(seen)
    tight_sets = [seen[v] for v in vertices]
    edges = [
        (a, b)
        for a, b in combinations(range(len(vertices)), 2)
        if _edge_between(P, tight_sets[a], tight_sets[b])
    ]
    dimension = affine_rank(vertices) if vertices else -1
    graph = VertexEdgeGraph(vertices=vertices, tight_sets=tight_sets, edges=edges,
                            dimension=dimension)
    graph.non_simple = [v for v in range(len(vertices)) if graph.degree(v) > dimension]
    if graph.non_simple:
        logger.warning(f"Polytope of {P.chambers} is not simple at vertices {graph.non_simple}")
    logger.debug(f"Polytope of {P.chambers}: {len(vertices)} vertices, {len(edges)} edges")
    return graph
