"""
Exact rational linear algebra on top of sympy's DomainMatrix over QQ.

Vectors are tuples of fractions.Fraction on the way in and out so callers never
see domain elements.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .normal_forms import to_fraction

RatVector = Tuple[Fraction, ...]


def to_domain(rows: Sequence[Sequence], n_cols: int) -> DomainMatrix:
    """Build a QQ DomainMatrix from rows of ints or Fractions."""
    data = [[QQ(Fraction(v).numerator, Fraction(v).denominator) for v in row] for row in rows]
    return DomainMatrix(data, (len(data), n_cols), QQ)


def rref(rows: Sequence[Sequence], n_cols: int) -> Tuple[List[RatVector], Tuple[int, ...]]:
    """
    Reduced row echelon form.

    Args:
        rows: Matrix rows
        n_cols: Column count

    Returns:
        (nonzero rows of the echelon form, pivot columns)
    """
    if not rows or n_cols == 0:
        return [], ()
    reduced, pivots = to_domain(rows, n_cols).rref()
    dense = reduced.to_Matrix()
    echelon = [tuple(to_fraction(dense[r, c]) for c in range(n_cols)) for r in range(len(pivots))]
    return echelon, tuple(pivots)


def rational_rank(rows: Sequence[Sequence], n_cols: Optional[int] = None) -> int:
    if not rows:
        return 0
    n_cols = len(rows[0]) if n_cols is None else n_cols
    if n_cols == 0:
        return 0
    return to_domain(rows, n_cols).rank()


def solve_square(rows: Sequence[Sequence], rhs: Sequence) -> Optional[RatVector]:
    """
    Unique solution of a square system, or None when it is singular.

    Args:
        rows: d x d coefficient rows
        rhs: Right-hand side of length d

    Returns:
        Tuple of d Fractions or None
    """
    d = len(rows)
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    echelon, pivots = rref(augmented, d + 1)
    if pivots != tuple(range(d)):
        return None
    return tuple(echelon[i][d] for i in range(d))


def nullspace(rows: Sequence[Sequence], n_cols: int) -> List[RatVector]:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    echelon, pivots = rref(rows, n_cols)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for row, c in zip(echelon, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return basis


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    if len(points) <= 1:
        return 0
    origin = points[0]
    differences = [[a - b for a, b in zip(pt, origin)] for pt in points[1:]]
    return rational_rank(differences, len(origin))
