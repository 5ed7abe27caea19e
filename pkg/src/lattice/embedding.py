"""
Torus Embedding Module

This module houses the subtorus T inside the coordinate torus D: the cocharacter
matrix rho, the lattice t-perp = ker(rho^T) with its Hermite basis, weight-coset
basepoints, matroid bases and the unimodularity test.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix

from .normal_forms import (
    as_integer_matrix,
    hermite_rows,
    integer_kernel,
    reduce_modulo_rows,
    smith_invariants,
    solve_integer,
)
from ..utils.exceptions import NonSaturated, NotInCoset, RankDeficient

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class TorusEmbedding:
    """
    Validated cocharacter data of T inside D = (G_m)^n.

    Attributes:
        rho: n rows of k integers; column j is the j-th cocharacter of T
        n: Rank of D
        k: Rank of T
        rank: Rank of rho over Q
        smith_invariants: Smith diagonal of rho^T
    """

    rho: Tuple[IntVector, ...]
    n: int
    k: int
    rank: int
    smith_invariants: Tuple[int, ...] = field(default=())

    @property
    def d(self) -> int:
        """Dimension of G = D/T."""
        return self.n - self.k

    def rho_transpose(self) -> np.ndarray:
        """rho^T as a k x n object matrix."""
        return as_integer_matrix(
            [[self.rho[i][j] for i in range(self.n)] for j in range(self.k)], self.n
        )

    def pair(self, a: Sequence[int]) -> IntVector:
        """rho^T a."""
        return tuple(sum(self.rho[i][j] * a[i] for i in range(self.n)) for j in range(self.k))

    @cached_property
    def lattices(self) -> "QuotientLattices":
        return QuotientLattices.from_embedding(self)


@dataclass(frozen=True)
class QuotientLattices:
    """
    Integer bases attached to an embedding.

    Attributes:
        tperp_basis: d x n rows forming a Z-basis of ker(rho^T)
        hermite_basis: Row Hermite form of tperp_basis, used for class keys
    """

    embedding: TorusEmbedding
    tperp_basis: Tuple[IntVector, ...]
    hermite_basis: Tuple[IntVector, ...]

    @classmethod
    def from_embedding(cls, embedding: TorusEmbedding) -> "QuotientLattices":
        kernel = integer_kernel(embedding.rho_transpose())
        tperp = tuple(tuple(int(v) for v in kernel[:, j]) for j in range(kernel.shape[1]))
        hermite = hermite_rows(as_integer_matrix(tperp, embedding.n))
        hermite_tuple = tuple(tuple(int(v) for v in row) for row in hermite)
        logger.debug(f"t-perp basis {tperp}, Hermite form {hermite_tuple}")
        return cls(embedding=embedding, tperp_basis=tperp, hermite_basis=hermite_tuple)

    def kernel_columns(self) -> List[IntVector]:
        """Columns N[:, i] of the t-perp basis: the image of e_i in g_Z."""
        d = len(self.tperp_basis)
        return [tuple(self.tperp_basis[r][i] for r in range(d)) for i in range(self.embedding.n)]

    def coset_basepoint(self, lam: Sequence[int]) -> IntVector:
        """
        Some integer a0 with rho^T a0 = lambda.

        Args:
            lam: Integer vector of length k

        Returns:
            Integer vector of length n

        Raises:
            NotInCoset: If lambda has the wrong length or no integer preimage
        """
        if len(lam) != self.embedding.k:
            raise NotInCoset(
                f"lambda has length {len(lam)}, expected {self.embedding.k}",
                {'lambda': list(lam)},
            )
        a0 = solve_integer(self.embedding.rho_transpose(), lam)
        if a0 is None:
            raise NotInCoset("lambda has no integer preimage under rho^T", {'lambda': list(lam)})
        return a0

    @cached_property
    def hermite_matrix(self) -> np.ndarray:
        return as_integer_matrix(self.hermite_basis, self.embedding.n)

    def class_key(self, x: Sequence[int]) -> IntVector:
        """Canonical representative of x modulo t-perp."""
        return reduce_modulo_rows(x, self.hermite_matrix)


def _parse_entry(value) -> int:
    if isinstance(value, bool):
        raise TypeError("boolean is not an integer entry")
    if isinstance(value, str):
        return int(value.strip())
    if isinstance(value, float):
        if not value.is_integer():
            raise TypeError(f"non-integer entry {value}")
        return int(value)
    return int(value)


def validate_embedding(rho: Sequence[Sequence], n: Optional[int] = None,
                       k: Optional[int] = None) -> TorusEmbedding:
    """
    Validate a cocharacter matrix.

    Args:
        rho: n rows of k integers (strings accepted for large entries)
        n: Optional declared ambient rank
        k: Optional declared subtorus rank, needed when rho has no columns

    Returns:
        A TorusEmbedding

    Raises:
        RankDeficient: If rho has rank < k over Q
        NonSaturated: If rho^T is not surjective onto Z^k
        ValueError: If the declared shape disagrees with the entries
    """
    rows = [tuple(_parse_entry(v) for v in row) for row in rho]
    n_rows = len(rows)
    if n is not None and n != n_rows:
        raise ValueError(f"rho has {n_rows} rows but n = {n}")
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ValueError("rho rows have different lengths")
    n_cols = widths.pop() if widths else (k or 0)
    if k is not None and k != n_cols:
        raise ValueError(f"rho has {n_cols} columns but k = {k}")
    if n_cols > n_rows:
        raise ValueError(f"need n >= k, got n = {n_rows}, k = {n_cols}")
    if n_rows == 0:
        raise ValueError("rho must have at least one row")

    rank = Matrix(rows).rank() if n_cols > 0 else 0
    if rank < n_cols:
        raise RankDeficient(f"rho has rank {rank} < k = {n_cols}", {'rank': rank, 'k': n_cols})

    embedding = TorusEmbedding(rho=tuple(rows), n=n_rows, k=n_cols, rank=rank)
    invariants = smith_invariants(embedding.rho_transpose())
    if any(v != 1 for v in invariants):
        raise NonSaturated(
            f"rho^T is not surjective, Smith diagonal {list(invariants)}",
            {'smith_invariants': list(invariants)},
        )
    embedding = TorusEmbedding(rho=tuple(rows), n=n_rows, k=n_cols, rank=rank,
                               smith_invariants=invariants)
    logger.info(f"Validated embedding n={n_rows}, k={n_cols}")
    return embedding


def _minor(columns: Sequence[IntVector], subset: Sequence[int]) -> int:
    if not subset:
        return 1
    return int(Matrix([list(columns[i]) for i in subset]).det())


def bases(embedding: TorusEmbedding) -> List[FrozenSet[int]]:
    """
    Matroid bases of the projection Z^n -> g_Z.

    A d-subset B of coordinates (0-based) is a basis when the columns of the
    t-perp basis indexed by B are linearly independent.

    Args:
        embedding: A validated embedding

    Returns:
        Bases sorted lexicographically
    """
    columns = embedding.lattices.kernel_columns()
    found = []
    for subset in combinations(range(embedding.n), embedding.d):
        if _minor(columns, subset) != 0:
            found.append(frozenset(subset))
    return found


def complementary_rows_nonsingular(embedding: TorusEmbedding, subset: Sequence[int]) -> bool:
    """True iff rho restricted to the rows outside subset is a nonsingular k x k matrix."""
    rest = [i for i in range(embedding.n) if i not in set(subset)]
    if not rest:
        return True
    return Matrix([list(embedding.rho[i]) for i in rest]).det() != 0


def is_unimodular(embedding: TorusEmbedding) -> bool:
    """
    True iff every nonsingular maximal minor of the t-perp basis is +1 or -1.

    Args:
        embedding: A validated embedding

    Returns:
        Whether every basis of coordinates spans g_Z over Z
    """
    columns = embedding.lattices.kernel_columns()
    for subset in combinations(range(embedding.n), embedding.d):
        if abs(_minor(columns, subset)) > 1:
            return False
    return True
