"""
Parameter Module

This module defines the quantization parameter (lambda, p), chamber records
and the pure crossing statistics delta and eta.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from sympy import isprime

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class Parameter:
    """
    An integral lift of the character lambda together with the period p.

    Attributes:
        lam: Integer vector of length k
        p: Period, at least 2
        prime: Whether p is prime
    """

    lam: IntVector
    p: int
    prime: bool = True

    @property
    def warnings(self) -> Tuple[str, ...]:
        return () if self.prime else ('non_prime_period',)


def make_parameter(lam: Sequence[int], p: int) -> Parameter:
    """
    Build a Parameter, warning when p is not prime.

    Args:
        lam: Integer vector
        p: Period

    Returns:
        A Parameter

    Raises:
        ValueError: If p < 2
    """
    p = int(p)
    if p < 2:
        raise ValueError(f"period p must be at least 2, got {p}")
    prime = bool(isprime(p))
    if not prime:
        logger.warning(f"Period p={p} is not prime; combinatorics still apply")
    return Parameter(lam=tuple(int(v) for v in lam), p=p, prime=prime)


class ChamberStatus(str, Enum):
    """Feasibility status of a chamber."""

    INTEGRAL = 'integral-nonempty'
    REAL_ONLY = 'real-only'
    EMPTY = 'empty'


@dataclass(frozen=True)
class Chamber:
    """A chamber index x with its cached status and, when integral, a witness weight."""

    x: IntVector
    status: ChamberStatus
    witness: Optional[IntVector] = None

    @property
    def nonempty(self) -> bool:
        return self.status == ChamberStatus.INTEGRAL


def taxicab(x: Sequence[int], y: Sequence[int]) -> int:
    """|x - y|_1."""
    return sum(abs(a - b) for a, b in zip(x, y))


def eta(x: Sequence[int], y: Sequence[int], u: Sequence[int]) -> IntVector:
    """
    Exponents of the general composition relation c_{x,y} c_{y,u} = s^eta c_{x,u}.

    eta_i = (|x_i - y_i| + |y_i - u_i| - |x_i - u_i|) / 2, always a
    nonnegative integer by the triangle inequality and parity.

    Args:
        x: First chamber index
        y: Middle chamber index
        u: Last chamber index

    Returns:
        Vector of nonnegative ints
    """
    return tuple(
        (abs(a - b) + abs(b - c) - abs(a - c)) // 2 for a, b, c in zip(x, y, u)
    )
