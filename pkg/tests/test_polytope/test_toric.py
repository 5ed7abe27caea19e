"""
Tests for h-vectors and Stanley-Reisner dimensions
"""

from fractions import Fraction

import pytest

from src.polytope.rational_polytope import polytope, vertices_and_edges
from src.polytope.toric import (
    HVector,
    expected_dimension,
    f_vector,
    functional_independence,
    h_vector,
    morse_h_vector,
    sr_dims,
)
from src.utils.exceptions import DegenerateFunctional


class TestHVector:
    """Tests for the HVector value type."""

    def test_betti_numbers(self):
        h = HVector((1, 4, 1))
        assert h.total == 6
        assert h.is_palindromic()
        assert [h.betti(i) for i in range(6)] == [1, 0, 4, 0, 1, 0]
        assert h.betti(-2) == 0

    def test_not_palindromic(self):
        assert not HVector((1, 2)).is_palindromic()


class TestToric:
    """Morse and Stanley-Reisner routes on the projective plane chambers."""

    def setup_method(self):
        self.chambers = {
            'triangle': (0, 0, 0),
            'hexagon': (0, 0, -1),
        }

    @pytest.mark.parametrize("name,expected", [
        ('triangle', (1, 1, 1)),
        ('hexagon', (1, 4, 1)),
    ])
    def test_routes_agree(self, p2_arrangement, name, expected):
        P = polytope(p2_arrangement, self.chambers[name])
        assert h_vector(P).h == expected
        assert sr_dims(P) == expected

    def test_f_vector(self, p2_arrangement):
        graph = vertices_and_edges(polytope(p2_arrangement, (0, 0, -1)))
        assert f_vector(graph) == {0: 6, 1: 6, 2: 1}

    def test_functional_independence(self, p2_arrangement):
        P = polytope(p2_arrangement, (0, 0, -1))
        found = functional_independence(P, trials=4, seed=3)
        assert len(found) == 4
        assert {h.h for h in found} == {(1, 4, 1)}

    def test_degenerate_functional(self, p2_arrangement):
        graph = vertices_and_edges(polytope(p2_arrangement, (0, 0, 0)))
        with pytest.raises(DegenerateFunctional):
            morse_h_vector(graph, (Fraction(0), Fraction(0)))

    def test_expected_dimension(self, p2_arrangement):
        assert expected_dimension(polytope(p2_arrangement, (0, 0, 0))) == 2
        segment = polytope(p2_arrangement, (0, 0, -2), (0, 0, -1))
        assert expected_dimension(segment) == 1
