"""
Shared fixtures: the projective plane example and the k = 0 circle and plane.
"""

import pytest

from src.arrangement.enumeration import enumerate_classes
from src.arrangement.parameter import make_parameter
from src.arrangement.periodic import PeriodicArrangement
from src.cli.spec_models import ProblemSpec
from src.lattice.embedding import validate_embedding

P2_RHO = [[1], [1], [1]]
P2_PERIOD = 5


def build_enumeration(rho, lam, p, k=None, seed=0):
    embedding = validate_embedding(rho, k=k)
    arrangement = PeriodicArrangement(embedding, make_parameter(lam, p), seed=seed)
    return enumerate_classes(arrangement)


@pytest.fixture(scope="session")
def p2_enumeration():
    """rho = (1,1,1)^T, p = 5, lambda = 1: three classes."""
    return build_enumeration(P2_RHO, [1], P2_PERIOD)


@pytest.fixture(scope="session")
def p2_arrangement(p2_enumeration):
    return p2_enumeration.arrangement


@pytest.fixture(scope="session")
def p2_singular_enumeration():
    """lambda = -1: two classes, not smooth."""
    return build_enumeration(P2_RHO, [-1], P2_PERIOD)


@pytest.fixture(scope="session")
def circle_enumeration():
    """k = 0, n = 1."""
    return build_enumeration([[]], [], 3, k=0)


@pytest.fixture(scope="session")
def plane_enumeration():
    """k = 0, n = 2."""
    return build_enumeration([[], []], [], 3, k=0)


@pytest.fixture
def p2_spec():
    return ProblemSpec(rho=P2_RHO, lam=[1], p=P2_PERIOD, name="projective-plane")


@pytest.fixture
def p2_spec_dict():
    return {"rho": P2_RHO, "lambda": [1], "p": P2_PERIOD, "options": {"truncation": 4}}
