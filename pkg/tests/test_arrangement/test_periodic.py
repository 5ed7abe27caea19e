"""
Tests for the Periodic Arrangement Module
"""

from fractions import Fraction
from itertools import product

import pytest

from src.arrangement.parameter import ChamberStatus, make_parameter
from src.arrangement.periodic import PeriodicArrangement
from src.lattice.embedding import validate_embedding
from src.utils.exceptions import NotInCoset


class TestPeriodicArrangement:
    """Tests on the projective plane arrangement rho = (1,1,1)^T, p = 5, lambda = 1."""

    def setup_method(self):
        self.embedding = validate_embedding([[1], [1], [1]])
        self.arrangement = PeriodicArrangement(self.embedding, make_parameter([1], 5))

    def test_basepoint_is_on_the_coset(self):
        assert sum(self.arrangement.basepoint) == 1

    def test_weight_to_chamber(self):
        assert self.arrangement.weight_to_chamber((6, -1, -4)) == (1, -1, -1)

    def test_weight_off_the_coset(self):
        with pytest.raises(NotInCoset):
            self.arrangement.weight_to_chamber((0, 0, 0))

    def test_delta_counts_separating_hyperplanes(self):
        assert self.arrangement.delta((1, 0, 0), (11, -5, -5)) == (2, 1, 1)

    @pytest.mark.parametrize("chamber,nonempty", [
        ((0, 0, 0), True),
        ((0, 0, -1), True),
        ((0, 0, -2), True),
        ((0, 0, 1), False),
        ((0, 0, -3), False),
        ((1, -1, 0), True),
    ])
    def test_integral_nonemptiness(self, chamber, nonempty):
        assert self.arrangement.is_nonempty_integral(chamber) == nonempty

    def test_witness_lies_in_the_chamber(self):
        record = self.arrangement.chamber((0, 0, -2))
        assert record.status == ChamberStatus.INTEGRAL
        a = record.witness
        assert sum(a) == 1
        assert -10 <= a[2] <= -6
        assert 0 <= a[0] <= 4 and 0 <= a[1] <= 4

    def test_lattice_points_of_the_top_triangle(self):
        points = self.arrangement.lattice_points((0, 0, 0))
        assert sorted(points) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]

    def test_same_class(self):
        assert self.arrangement.same_class((0, 0, -1), (1, -1, -1))
        assert not self.arrangement.same_class((0, 0, -1), (0, 0, 0))

    def test_real_nonemptiness_with_default_perturbation(self):
        assert self.arrangement.is_nonempty_real((0, 0, -2))
        assert self.arrangement.is_nonempty_real((0, 0, -1))
        assert not self.arrangement.is_nonempty_real((0, 0, 1))

    def test_perturbations_are_deterministic_and_small(self):
        first = self.arrangement.sample_eps('purpose', 0)
        assert first == self.arrangement.sample_eps('purpose', 0)
        assert all(Fraction(0) < e < Fraction(1, 2) for e in first)
        signed = self.arrangement.sample_eps('purpose', 1, signed=True)
        assert all(e != 0 for e in signed)

    def test_search_basis_parametrizes_the_coset(self):
        weight = self.arrangement.weight_from_basis((2, 3))
        assert sum(weight) == 1
        for t, coordinate in enumerate(self.arrangement.search_basis):
            assert weight[coordinate] == (2, 3)[t]

    def test_relative_lifts_are_sorted_by_distance(self):
        lifts = self.arrangement.relative_lifts((0, 0, 0), (0, 0, -1), 3)
        assert lifts[:3] == [(-1, 0, 0), (0, -1, 0), (0, 0, -1)]
        assert all(sum(u) == -1 for u in lifts)

    def test_lift_distance_profile(self):
        profile = self.arrangement.lift_distance_profile((0, 0, 0), (0, 0, 0), 2)
        assert profile == {0: 1, 2: 6}

    def test_adjacent_lifts(self):
        lifts = self.arrangement.adjacent_lifts((0, 0, 0), (0, 0, -1))
        assert len(lifts) == 6
        assert all(max(abs(v) for v in u) <= 1 and sum(u) == -1 for u in lifts)


class TestTranslation:
    """Shifting lambda by rho^T(p v) shifts every nonempty chamber by v."""

    def test_translation(self):
        embedding = validate_embedding([[1], [1], [1]])
        base = PeriodicArrangement(embedding, make_parameter([1], 5))
        shifted = PeriodicArrangement(embedding, make_parameter([1 + 5 * 2], 5))
        v = (1, 1, 0)
        for x in [(0, 0, 0), (0, 0, -1), (0, 0, -2), (0, 0, 1)]:
            moved = tuple(a + b for a, b in zip(x, v))
            assert base.is_nonempty_integral(x) == shifted.is_nonempty_integral(moved)


class TestRealChambers:
    """Real against integral feasibility on the projective plane."""

    def setup_method(self):
        self.embedding = validate_embedding([[1], [1], [1]])

    def test_middle_chamber_is_real(self):
        arrangement = PeriodicArrangement(self.embedding, make_parameter([1], 5))
        assert arrangement.is_nonempty_real((0, 0, -1))
        assert arrangement.chamber((0, 0, -1)).status == ChamberStatus.INTEGRAL

    def test_singular_parameter_has_a_real_only_chamber(self):
        arrangement = PeriodicArrangement(self.embedding, make_parameter([-1], 5))
        assert not arrangement.is_nonempty_integral((0, 0, -3))
        assert arrangement.is_nonempty_real((0, 0, -3))
        assert arrangement.chamber((0, 0, -3)).status == ChamberStatus.REAL_ONLY
        assert arrangement.chamber((0, 0, -3)).witness is None

    def test_real_only_disappears_for_smooth_lambda(self):
        arrangement = PeriodicArrangement(self.embedding, make_parameter([1], 5))
        assert arrangement.chamber((0, 0, -3)).status == ChamberStatus.EMPTY

    @pytest.mark.parametrize("lam", [1, -1, 2])
    def test_integral_implies_real(self, lam):
        arrangement = PeriodicArrangement(self.embedding, make_parameter([lam], 5))
        for x in product(range(-2, 2), repeat=3):
            if arrangement.is_nonempty_integral(x):
                assert arrangement.is_nonempty_real(x)
