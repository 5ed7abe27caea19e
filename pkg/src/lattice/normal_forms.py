"""
Normal Forms Module

Integer diagonalization with tracked unimodular transforms, kernels over Z,
row Hermite forms and class-key reduction. All matrices are numpy object
arrays so entries stay arbitrary-precision Python ints.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form


def as_integer_matrix(rows: Sequence[Sequence[int]], n_cols: Optional[int] = None) -> np.ndarray:
    """
    Build an object-dtype integer matrix, keeping the shape when there are no rows.

    Args:
        rows: Row-major integer entries
        n_cols: Column count, required when rows is empty

    Returns:
        numpy array with dtype=object
    """
    rows = [list(r) for r in rows]
    if n_cols is None:
        n_cols = len(rows[0]) if rows else 0
    matrix = np.zeros((len(rows), n_cols), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            matrix[i, j] = int(value)
    return matrix


def identity(size: int) -> np.ndarray:
    """Object-dtype identity matrix."""
    matrix = np.zeros((size, size), dtype=object)
    for i in range(size):
        matrix[i, i] = 1
    return matrix


def gcd_step(a: int, b: int) -> np.ndarray:
    """
    Determinant-one matrix M with M @ (a, b) = (g, 0).

    When a divides b the first row is (1, 0), so the first operand is left
    untouched; the diagonalization loop relies on that to terminate.

    Args:
        a: First entry
        b: Second entry

    Returns:
        2x2 object-dtype integer matrix
    """
    if b == 0:
        return identity(2)
    if a != 0 and b % a == 0:
        return np.array([[1, 0], [-(b // a), 1]], dtype=object)

    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t

    if old_s * t - old_t * s == -1:
        s, t = -s, -t
    if old_r < 0:
        old_s, old_t, s, t = -old_s, -old_t, -s, -t
    return np.array([[old_s, old_t], [s, t]], dtype=object)


def _inverse_2x2(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=object)


@dataclass(frozen=True)
class NormalForm:
    """A == S @ D @ T with S, T unimodular and D diagonal."""

    S: np.ndarray
    D: np.ndarray
    T: np.ndarray
    S_inv: np.ndarray
    T_inv: np.ndarray
    rank: int

    def diagonal(self) -> List[int]:
        return [int(self.D[i, i]) for i in range(self.rank)]


def normal_form(A: np.ndarray) -> NormalForm:
    """
    Diagonalize an integer matrix by unimodular row and column operations.

    The diagonal is not normalized to Smith form (no divisibility chain); the
    first `rank` diagonal entries are nonzero and the rest vanish.

    Args:
        A: m x n object-dtype integer matrix

    Returns:
        NormalForm with the transforms and their inverses
    """
    D = np.array(A, dtype=object).copy()
    m, n = D.shape
    S, S_inv = identity(m), identity(m)
    T, T_inv = identity(n), identity(n)

    rank = 0
    for i in range(min(m, n)):
        pivot = next(((r, c) for r in range(i, m) for c in range(i, n) if D[r, c] != 0), None)
        if pivot is None:
            break
        r, c = pivot
        if r != i:
            D[[i, r]] = D[[r, i]]
            S[:, [i, r]] = S[:, [r, i]]
            S_inv[[i, r]] = S_inv[[r, i]]
        if c != i:
            D[:, [i, c]] = D[:, [c, i]]
            T[[i, c]] = T[[c, i]]
            T_inv[:, [i, c]] = T_inv[:, [c, i]]

        changed = True
        while changed:
            changed = False
            for j in range(i + 1, m):
                if D[j, i] != 0:
                    M = gcd_step(D[i, i], D[j, i])
                    D[[i, j]] = M @ D[[i, j]]
                    S[:, [i, j]] = S[:, [i, j]] @ _inverse_2x2(M)
                    S_inv[[i, j]] = M @ S_inv[[i, j]]
                    changed = True
            for j in range(i + 1, n):
                if D[i, j] != 0:
                    M = gcd_step(D[i, i], D[i, j])
                    D[:, [i, j]] = D[:, [i, j]] @ M.T
                    T[[i, j]] = _inverse_2x2(M).T @ T[[i, j]]
                    T_inv[:, [i, j]] = T_inv[:, [i, j]] @ M.T
                    changed = True
        rank += 1

    return NormalForm(S=S, D=D, T=T, S_inv=S_inv, T_inv=T_inv, rank=rank)


def integer_kernel(A: np.ndarray) -> np.ndarray:
    """
    Z-basis of {v in Z^n : A v = 0}, returned as the columns of an n x r matrix.

    Args:
        A: m x n object-dtype integer matrix

    Returns:
        n x (n - rank) object-dtype matrix
    """
    form = normal_form(A)
    return form.T_inv[:, form.rank:]


def solve_integer(A: np.ndarray, b: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """
    Some integer solution of A x = b, or None when none exists.

    Args:
        A: m x n object-dtype integer matrix
        b: Right-hand side of length m

    Returns:
        Tuple of n ints or None
    """
    form = normal_form(A)
    m, n = form.D.shape
    rhs = form.S_inv @ np.array([int(v) for v in b], dtype=object).reshape(m)
    y = np.zeros(n, dtype=object)
    for i in range(m):
        if i < form.rank:
            if rhs[i] % form.D[i, i] != 0:
                return None
            y[i] = rhs[i] // form.D[i, i]
        elif rhs[i] != 0:
            return None
    x = form.T_inv @ y
    return tuple(int(v) for v in x)


def smith_invariants(A: np.ndarray) -> Tuple[int, ...]:
    """
    Diagonal of the Smith normal form of A.

    Args:
        A: m x n object-dtype integer matrix

    Returns:
        Tuple of min(m, n) nonnegative ints
    """
    m, n = A.shape
    if m == 0 or n == 0:
        return ()
    snf = smith_normal_form(Matrix(A.tolist()), domain=ZZ)
    return tuple(abs(int(snf[i, i])) for i in range(min(m, n)))


def hermite_rows(B: np.ndarray) -> np.ndarray:
    """
    Row-style Hermite normal form of the row lattice of B.

    Pivots are positive, entries above a pivot are reduced into [0, pivot),
    and zero rows are dropped.

    Args:
        B: r x n object-dtype integer matrix

    Returns:
        rank x n object-dtype matrix
    """
    H = np.array(B, dtype=object).copy()
    rows, cols = H.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        for i in range(r + 1, rows):
            if H[i, c] != 0:
                M = gcd_step(H[r, c], H[i, c])
                H[[r, i]] = M @ H[[r, i]]
        if H[r, c] == 0:
            continue
        if H[r, c] < 0:
            H[r] = -H[r]
        for i in range(r):
            H[i] = H[i] - (H[i, c] // H[r, c]) * H[r]
        r += 1
    return H[:r]


def pivot_columns(H: np.ndarray) -> List[int]:
    """First nonzero column of each row of a row echelon matrix."""
    pivots = []
    for row in H:
        pivots.append(next(j for j, v in enumerate(row) if v != 0))
    return pivots


def reduce_modulo_rows(x: Sequence[int], H: np.ndarray) -> Tuple[int, ...]:
    """
    Canonical representative of x modulo the row lattice of a Hermite matrix.

    Args:
        x: Integer vector
        H: Output of hermite_rows

    Returns:
        Reduced vector whose pivot coordinates lie in [0, pivot)
    """
    v = np.array([int(t) for t in x], dtype=object)
    for row, c in zip(H, pivot_columns(H)):
        v = v - (v[c] // row[c]) * row
    return tuple(int(t) for t in v)


def to_fraction(value: Any) -> Fraction:
    """Convert an int, Fraction, sympy Rational or QQ element to Fraction."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    return Fraction(int(value.numerator), int(value.denominator))
