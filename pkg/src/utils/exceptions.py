"""
Exceptions Module

This module defines the errors raised by the lattice, arrangement, polytope,
algebra and tilting layers.
"""

from typing import Any, Dict, Optional


class HypertoricError(ValueError):
    """Base class for every error raised by hypertoric-kit."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.context = context or {}


class RankDeficient(HypertoricError):
    """rho does not have full column rank over Q."""


class NonSaturated(HypertoricError):
    """rho^T is not surjective onto Z^k."""


class NotInCoset(HypertoricError):
    """A weight does not satisfy rho^T a = lambda."""


class DegeneratePerturbation(HypertoricError):
    """A perturbed feasibility test landed exactly on a boundary."""


class EmptyIntersection(HypertoricError):
    """Two chamber closures do not meet."""


class NotSimple(HypertoricError):
    """A polytope vertex has more tight constraints than the dimension."""


class DegenerateFunctional(HypertoricError):
    """A linear functional is constant along some edge."""


class TruncationTooLarge(HypertoricError):
    """The truncation oracle would exceed its work budget."""


class DualityFailure(HypertoricError):
    """Quadratic relation spaces are not mutual annihilators."""


class ReciprocityFailure(HypertoricError):
    """The Euler-form identity for a Koszul pair fails."""


class RelationMismatch(HypertoricError):
    """A relation does not hold after substituting monomial sections."""


class InvalidSpec(HypertoricError):
    """A problem spec could not be parsed or validated."""


class ExhaustedRejectionBudget(HypertoricError):
    """The corpus sampler gave up before producing enough specs."""
