"""
Periodic Arrangement Module

This module implements the periodic arrangement a_i = kp - 1/2 on the weight
coset {a : rho^T a = lambda}. It answers chamber feasibility questions:
integral nonemptiness through a search over the coordinates of a matroid basis,
and real nonemptiness of perturbed open boxes through the support function of
the zonotope rho^T(box).
"""

import logging
import random
from collections import defaultdict
from fractions import Fraction
from itertools import combinations, product
from math import gcd, lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import Matrix

from .parameter import Chamber, ChamberStatus, Parameter, taxicab
from ..lattice.embedding import TorusEmbedding, bases
from ..lattice.normal_forms import to_fraction
from ..utils.exceptions import DegeneratePerturbation, NotInCoset

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]
RatVector = Tuple[Fraction, ...]

EPS_DENOMINATOR = 2 ** 16
RESAMPLE_ATTEMPTS = 8


def _primitive(vector: Sequence[Fraction]) -> IntVector:
    """Scale a rational vector to a primitive integer vector with positive leading entry."""
    scale = lcm(*(v.denominator for v in vector))
    ints = [int(v * scale) for v in vector]
    g = gcd(*ints)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


class PeriodicArrangement:
    """
    The periodic arrangement of one embedding and parameter.

    All queries are pure functions of (embedding, parameter, seed); the status
    cache only memoizes them.
    """

    def __init__(self, embedding: TorusEmbedding, parameter: Parameter, seed: int = 0):
        """
        Initialize the arrangement.

        Args:
            embedding: A validated embedding
            parameter: The parameter (lambda, p)
            seed: Seed for every pseudo-random perturbation

        Raises:
            NotInCoset: If lambda has the wrong length
        """
        self.embedding = embedding
        self.parameter = parameter
        self.lattices = embedding.lattices
        self.n = embedding.n
        self.k = embedding.k
        self.d = embedding.d
        self.p = parameter.p
        self.lam = parameter.lam
        self.seed = seed
        self.basepoint = self.lattices.coset_basepoint(parameter.lam)
        self.bases = bases(embedding)

        self._search_basis, self._affine_map, self._affine_offset = self._prepare_search()
        self._normals, self._projections = self._facet_normals()
        self._eps_bound = self._perturbation_bound()
        self._status_cache: Dict[IntVector, Chamber] = {}
        self._ball_cache: Dict[int, Dict[IntVector, List[IntVector]]] = {}
        self.default_eps = self.sample_eps('default', 0)

    # ------------------------------------------------------------------
    # weights
    # ------------------------------------------------------------------

    def check_in_coset(self, a: Sequence[int]) -> None:
        """
        Raises:
            NotInCoset: If rho^T a != lambda
        """
        if len(a) != self.n or self.embedding.pair(a) != self.lam:
            raise NotInCoset(
                f"weight {list(a)} does not satisfy rho^T a = {list(self.lam)}",
                {'weight': list(a)},
            )

    def weight_to_chamber(self, a: Sequence[int]) -> IntVector:
        """
        Chamber containing a weight: x_i = floor(a_i / p).

        Args:
            a: Integer weight in the coset

        Returns:
            Chamber index

        Raises:
            NotInCoset: If the weight is off the coset
        """
        self.check_in_coset(a)
        return tuple(int(v) // self.p for v in a)

    def delta(self, a: Sequence[int], b: Sequence[int]) -> IntVector:
        """
        Number of hyperplanes a_i = kp - 1/2 separating two weights, per coordinate.

        Raises:
            NotInCoset: If either weight is off the coset
        """
        x = self.weight_to_chamber(a)
        y = self.weight_to_chamber(b)
        return tuple(abs(u - v) for u, v in zip(x, y))

    # ------------------------------------------------------------------
    # integral feasibility
    # ------------------------------------------------------------------

    def _prepare_search(self) -> Tuple[List[int], List[List[Fraction]], List[Fraction]]:
        """Affine parametrization a = c + M a_B over the first basis B."""
        basis = sorted(self.bases[0]) if self.bases else []
        tperp = self.lattices.tperp_basis
        kernel = [[tperp[r][i] for r in range(self.d)] for i in range(self.n)]

        if self.d == 0:
            return [], [[] for _ in range(self.n)], [Fraction(v) for v in self.basepoint]

        inverse = Matrix([kernel[i] for i in basis]).inv()
        affine = [
            [
                sum((Fraction(kernel[i][r]) * to_fraction(inverse[r, t]) for r in range(self.d)),
                    Fraction(0))
                for t in range(self.d)
            ]
            for i in range(self.n)
        ]
        offset = [
            Fraction(self.basepoint[i])
            - sum((affine[i][t] * self.basepoint[basis[t]] for t in range(self.d)), Fraction(0))
            for i in range(self.n)
        ]
        return basis, affine, offset

    @property
    def search_basis(self) -> List[int]:
        """Coordinates that parametrize the coset."""
        return list(self._search_basis)

    def weight_from_basis(self, values: Sequence) -> RatVector:
        """The coset point whose search-basis coordinates are `values`."""
        return tuple(
            self._affine_offset[i]
            + sum((self._affine_map[i][t] * Fraction(values[t]) for t in range(self.d)),
                  Fraction(0))
            for i in range(self.n)
        )

    def _box_points(self, lower: Sequence[int], upper: Sequence[int]) -> Iterator[IntVector]:
        """Integer coset points a with lower <= a <= upper, in lexicographic order of a_B."""
        basis, affine, offset = self._search_basis, self._affine_map, self._affine_offset
        n, d = self.n, len(basis)

        tail_lo = [[Fraction(0)] * n for _ in range(d + 1)]
        tail_hi = [[Fraction(0)] * n for _ in range(d + 1)]
        for t in reversed(range(d)):
            b = basis[t]
            for i in range(n):
                low, high = affine[i][t] * lower[b], affine[i][t] * upper[b]
                tail_lo[t][i] = tail_lo[t + 1][i] + min(low, high)
                tail_hi[t][i] = tail_hi[t + 1][i] + max(low, high)

        def search(t: int, values: List[Fraction]) -> Iterator[IntVector]:
            for i in range(n):
                if values[i] + tail_hi[t][i] < lower[i] or values[i] + tail_lo[t][i] > upper[i]:
                    return
            if t == d:
                if all(v.denominator == 1 for v in values):
                    yield tuple(int(v) for v in values)
                return
            b = basis[t]
            for v in range(lower[b], upper[b] + 1):
                yield from search(t + 1, [values[i] + affine[i][t] * v for i in range(n)])

        yield from search(0, list(offset))

    def integral_witness(self, x: Sequence[int]) -> Optional[IntVector]:
        """First integer weight in Delta_x, or None."""
        lower = [self.p * v for v in x]
        upper = [self.p * v + self.p - 1 for v in x]
        return next(self._box_points(lower, upper), None)

    def is_nonempty_integral(self, x: Sequence[int]) -> bool:
        """
        Whether Delta_x contains an integer weight.

        Args:
            x: Chamber index

        Returns:
            True iff px_i <= a_i < px_i + p has a solution on the coset
        """
        return self.chamber(x).status == ChamberStatus.INTEGRAL

    def lattice_points(self, x: Sequence[int]) -> List[IntVector]:
        """All integer weights in Delta_x."""
        lower = [self.p * v for v in x]
        upper = [self.p * v + self.p - 1 for v in x]
        return list(self._box_points(lower, upper))

    # ------------------------------------------------------------------
    # real feasibility
    # ------------------------------------------------------------------

    def _facet_normals(self) -> Tuple[List[IntVector], List[IntVector]]:
        """Primitive normals of hyperplanes spanned by k-1 rows of rho, with u . rho_i."""
        if self.k == 0:
            return [], []
        rows = [list(r) for r in self.embedding.rho]
        normals = set()
        if self.k == 1:
            normals.add((1,))
        else:
            for subset in combinations(range(self.n), self.k - 1):
                sub = Matrix([rows[i] for i in subset])
                if sub.rank() != self.k - 1:
                    continue
                null = sub.nullspace()
                normals.add(_primitive([to_fraction(v) for v in null[0]]))
        ordered = sorted(normals)
        projections = [
            tuple(sum(u[j] * rows[i][j] for j in range(self.k)) for i in range(self.n))
            for u in ordered
        ]
        return ordered, projections

    def _perturbation_bound(self) -> int:
        if not self._projections:
            return 0
        return max(sum(abs(v) for v in proj) for proj in self._projections)

    def sample_eps(self, purpose: str, attempt: int, signed: bool = False) -> RatVector:
        """
        Deterministic small perturbation vector.

        Entries are r / 2^16 with r chosen so that |u . rho^T eps| < 1/2 for every
        facet normal u; signed perturbations draw random signs.

        Args:
            purpose: Label mixed into the seed
            attempt: Re-sample counter
            signed: Whether entries may be negative

        Returns:
            Tuple of n nonzero Fractions
        """
        rng = random.Random(f"{self.seed}:{purpose}:{attempt}")
        top = max(1, (EPS_DENOMINATOR - 1) // (2 * self._eps_bound + 1))
        eps = []
        for _ in range(self.n):
            value = Fraction(rng.randint(1, top), EPS_DENOMINATOR)
            if signed and rng.random() < 0.5:
                value = -value
            eps.append(value)
        return tuple(eps)

    def zonotope_slack(self, lower: Sequence[Fraction], upper: Sequence[Fraction],
                       target: Sequence[Fraction]) -> Optional[Fraction]:
        """
        Smallest support-function margin of target inside sum_i [lower_i, upper_i] rho_i.

        Returns:
            None when k = 0 (the image is a point and always matches)
        """
        if self.k == 0:
            return None
        best = None
        for u, proj in zip(self._normals, self._projections):
            high = sum((max(lower[i] * proj[i], upper[i] * proj[i]) for i in range(self.n)),
                       Fraction(0))
            low = sum((min(lower[i] * proj[i], upper[i] * proj[i]) for i in range(self.n)),
                      Fraction(0))
            value = sum(u[j] * target[j] for j in range(self.k))
            slack = min(high - value, value - low)
            best = slack if best is None else min(best, slack)
        return best

    def is_nonempty_real(self, x: Sequence[int], eps: Optional[Sequence[Fraction]] = None) -> bool:
        """
        Whether the open box px_i - eps_i < a_i < px_i + p - eps_i meets the real coset.

        Args:
            x: Chamber index
            eps: Perturbation with entries in (-1, 0) or (0, 1); defaults to the
                arrangement's positive perturbation

        Returns:
            Feasibility of the open perturbed box

        Raises:
            DegeneratePerturbation: If lambda sits on the boundary of the image
        """
        eps = self.default_eps if eps is None else tuple(Fraction(v) for v in eps)
        lower = [Fraction(self.p * v) - e for v, e in zip(x, eps)]
        upper = [Fraction(self.p * v + self.p) - e for v, e in zip(x, eps)]
        slack = self.zonotope_slack(lower, upper, [Fraction(v) for v in self.lam])
        if slack is None:
            return True
        if slack == 0:
            raise DegeneratePerturbation(
                f"perturbed box of chamber {list(x)} is boundary-tight",
                {'chamber': list(x)},
            )
        return slack > 0

    def closed_box_meets_coset(self, lower: Sequence[Fraction], upper: Sequence[Fraction]) -> bool:
        """Whether lower <= a <= upper has a real solution on the coset."""
        if any(lo > hi for lo, hi in zip(lower, upper)):
            return False
        slack = self.zonotope_slack(lower, upper, [Fraction(v) for v in self.lam])
        return slack is None or slack >= 0

    def real_seed(self, eps: Sequence[Fraction]) -> IntVector:
        """Chamber of the perturbed real arrangement containing the basepoint."""
        return tuple(int((Fraction(a) + e) // self.p) for a, e in zip(self.basepoint, eps))

    # ------------------------------------------------------------------
    # chambers
    # ------------------------------------------------------------------

    def chamber(self, x: Sequence[int]) -> Chamber:
        """
        Chamber record with status integral-nonempty, real-only or empty.

        Args:
            x: Chamber index

        Returns:
            Cached Chamber
        """
        x = tuple(int(v) for v in x)
        cached = self._status_cache.get(x)
        if cached is not None:
            return cached

        witness = self.integral_witness(x)
        if witness is not None:
            record = Chamber(x=x, status=ChamberStatus.INTEGRAL, witness=witness)
        elif self.real_with_resampling(x):
            record = Chamber(x=x, status=ChamberStatus.REAL_ONLY)
        else:
            record = Chamber(x=x, status=ChamberStatus.EMPTY)
        self._status_cache[x] = record
        return record

    def real_with_resampling(self, x: Sequence[int]) -> bool:
        """is_nonempty_real with fresh positive perturbations on degeneracy."""
        for attempt in range(RESAMPLE_ATTEMPTS):
            eps = self.default_eps if attempt == 0 else self.sample_eps('resample', attempt)
            try:
                return self.is_nonempty_real(x, eps)
            except DegeneratePerturbation:
                logger.warning(f"Re-sampling perturbation for chamber {list(x)}")
        raise DegeneratePerturbation(
            f"no generic perturbation found for chamber {list(x)}", {'chamber': list(x)}
        )

    def same_class(self, x: Sequence[int], y: Sequence[int]) -> bool:
        """x and y differ by an element of t-perp."""
        return self.embedding.pair(x) == self.embedding.pair(y)

    # ------------------------------------------------------------------
    # lifts
    # ------------------------------------------------------------------

    def _ball(self, radius: int) -> Dict[IntVector, List[IntVector]]:
        """Offsets with |d|_1 <= radius grouped by rho^T d."""
        if radius not in self._ball_cache:
            grouped: Dict[IntVector, List[IntVector]] = defaultdict(list)

            def extend(prefix: List[int], budget: int) -> None:
                if len(prefix) == self.n:
                    offset = tuple(prefix)
                    grouped[self.embedding.pair(offset)].append(offset)
                    return
                for v in range(-budget, budget + 1):
                    extend(prefix + [v], budget - abs(v))

            extend([], radius)
            for offsets in grouped.values():
                offsets.sort(key=lambda o: (sum(abs(v) for v in o), o))
            self._ball_cache[radius] = dict(grouped)
        return self._ball_cache[radius]

    def relative_lifts(self, x: Sequence[int], y: Sequence[int], radius: int) -> List[IntVector]:
        """
        Chambers in the class of y within taxicab distance radius of x.

        Args:
            x: Base chamber
            y: Any chamber of the target class
            radius: Taxicab radius

        Returns:
            Lifts sorted by distance then lexicographically
        """
        target = tuple(b - a for a, b in zip(self.embedding.pair(x), self.embedding.pair(y)))
        offsets = self._ball(radius).get(target, [])
        return [tuple(a + o for a, o in zip(x, offset)) for offset in offsets]

    def adjacent_lifts(self, x: Sequence[int], y: Sequence[int]) -> List[IntVector]:
        """Lifts u of the class of y with |x_i - u_i| <= 1 for every i."""
        target = self.embedding.pair(y)
        lifts = []
        for offset in product((-1, 0, 1), repeat=self.n):
            u = tuple(a + o for a, o in zip(x, offset))
            if self.embedding.pair(u) == target:
                lifts.append(u)
        lifts.sort(key=lambda u: (taxicab(x, u), u))
        return lifts

    def lift_distance_profile(self, x: Sequence[int], y: Sequence[int],
                              radius: int) -> Dict[int, int]:
        """Number of lifts of the class of y at each taxicab distance <= radius from x."""
        profile: Dict[int, int] = defaultdict(int)
        for u in self.relative_lifts(x, y, radius):
            profile[taxicab(x, u)] += 1
        return dict(profile)
