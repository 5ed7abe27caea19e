"""
Tests for the Torus Embedding Module
"""

from itertools import combinations

import pytest

from src.lattice.embedding import (
    bases,
    complementary_rows_nonsingular,
    is_unimodular,
    validate_embedding,
)
from src.utils.exceptions import NonSaturated, NotInCoset, RankDeficient


class TestValidateEmbedding:
    """Tests for validate_embedding."""

    def test_projective_plane(self):
        embedding = validate_embedding([[1], [1], [1]])
        assert (embedding.n, embedding.k, embedding.d) == (3, 1, 2)
        assert embedding.smith_invariants == (1,)

    def test_string_entries_are_parsed(self):
        embedding = validate_embedding([["1"], ["1"], ["1"]])
        assert embedding.rho == ((1,), (1,), (1,))

    def test_non_saturated(self):
        with pytest.raises(NonSaturated) as excinfo:
            validate_embedding([[2], [2]])
        assert excinfo.value.context['smith_invariants'] == [2]

    def test_rank_deficient(self):
        with pytest.raises(RankDeficient):
            validate_embedding([[1, 2], [2, 4], [3, 6]])

    def test_ragged_rows(self):
        with pytest.raises(ValueError):
            validate_embedding([[1, 0], [1]])

    def test_more_columns_than_rows(self):
        with pytest.raises(ValueError):
            validate_embedding([[1, 0]])

    def test_empty_subtorus(self):
        embedding = validate_embedding([[], []], k=0)
        assert (embedding.n, embedding.k, embedding.d) == (2, 0, 2)

    def test_declared_k_mismatch(self):
        with pytest.raises(ValueError):
            validate_embedding([[1], [1]], k=2)


class TestQuotientLattices:
    """Tests for the t-perp basis, basepoints and class keys."""

    def setup_method(self):
        self.embedding = validate_embedding([[1], [1], [1]])
        self.lattices = self.embedding.lattices

    def test_tperp_rows_are_in_kernel(self):
        assert len(self.lattices.tperp_basis) == 2
        for row in self.lattices.tperp_basis:
            assert self.embedding.pair(row) == (0,)

    def test_hermite_basis(self):
        assert self.lattices.hermite_basis == ((1, 0, -1), (0, 1, -1))

    def test_coset_basepoint(self):
        a0 = self.lattices.coset_basepoint([7])
        assert self.embedding.pair(a0) == (7,)

    def test_coset_basepoint_wrong_length(self):
        with pytest.raises(NotInCoset):
            self.lattices.coset_basepoint([1, 2])

    def test_class_key_depends_only_on_pairing(self):
        assert self.lattices.class_key((2, -3, 0)) == (0, 0, -1)
        assert self.lattices.class_key((0, 0, -1)) == (0, 0, -1)


class TestBases:
    """Tests for matroid bases and unimodularity."""

    def test_projective_plane_bases(self):
        found = bases(validate_embedding([[1], [1], [1]]))
        assert found == [frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})]

    def test_bases_match_complementary_minors(self):
        embedding = validate_embedding([[1, 0], [0, 1], [1, 1], [1, -1]])
        found = set(bases(embedding))
        for subset in combinations(range(embedding.n), embedding.d):
            expected = complementary_rows_nonsingular(embedding, subset)
            assert (frozenset(subset) in found) == expected

    def test_zero_row_is_never_in_a_basis(self):
        embedding = validate_embedding([[1], [0]])
        assert bases(embedding) == [frozenset({1})]

    def test_unimodular(self):
        assert is_unimodular(validate_embedding([[1], [1], [1]]))

    def test_not_unimodular(self):
        assert not is_unimodular(validate_embedding([[1], [2]]))
