"""
Tests for the Quiver Presentation Module
"""

from collections import Counter
from fractions import Fraction

import pytest

from src.algebra.presentation import (
    ALGEBRA_H,
    ALGEBRA_H_DUAL,
    Relation,
    build_H,
    build_H_dual,
    derive_path_relations,
)


class TestBuildH:
    """Presentation of H on the projective plane."""

    @pytest.fixture(autouse=True)
    def _presentation(self, p2_enumeration):
        self.H = build_H(p2_enumeration, smooth=True)

    def test_vertices_and_arrows(self):
        assert self.H.algebra == ALGEBRA_H
        assert self.H.labels == ['A', 'B', 'C']
        assert len(self.H.arrows) == 12
        assert len(self.H.arrows_from(1)) == 6
        assert self.H.base_symbols == ['s1', 's2', 's3']
        assert self.H.base_relations == [(1, 1, 1)]

    def test_arrow_names(self):
        names = {a.name for a in self.H.arrows_from(0)}
        assert names == {'c1+@A', 'c2+@A', 'c3+@A'}

    def test_relation_kinds(self):
        kinds = Counter(r.kind for r in self.H.relations)
        assert kinds == {'wall-cross': 12, 'codim1': 6, 'codim2': 6}
        assert all(r.degree == 2 for r in self.H.relations)

    def test_wall_cross_relation_terms(self):
        relation = next(r for r in self.H.relations if r.kind == 'wall-cross')
        data = relation.to_dict(self.H.labels)
        assert data['source'] == data['target']
        assert data['terms'][1]['coefficient'] == '-1'
        assert data['terms'][1]['path'][0].startswith('s')

    def test_to_dict(self):
        data = self.H.to_dict()
        assert data['vertices'] == ['A', 'B', 'C']
        assert data['arrows'][0]['coordinate'] in (1, 2, 3)
        assert data['warnings'] == []


class TestBuildHDual:
    """Presentation of H! on the projective plane."""

    def test_relation_kinds(self, p2_enumeration):
        H_dual = build_H_dual(p2_enumeration, smooth=True)
        assert H_dual.algebra == ALGEBRA_H_DUAL
        assert H_dual.base_symbols == ['t1', 't2', 't3']
        kinds = Counter(r.kind for r in H_dual.relations)
        assert kinds == {'wall-crossbang': 9, 'codim1bang': 6, 'codim2bang': 6, 'doublestep': 18}

    def test_base_relations_span_the_kernel(self, p2_enumeration):
        H_dual = build_H_dual(p2_enumeration)
        for row in H_dual.base_relations:
            assert sum(row) == 0

    def test_non_smooth_is_stamped(self, p2_singular_enumeration):
        H_dual = build_H_dual(p2_singular_enumeration, smooth=False)
        assert H_dual.warnings == ['non_smooth_parameter']


class TestPathGroups:
    """Path groups and their relation spans."""

    def test_groups_are_complementary(self, p2_enumeration):
        H = build_H(p2_enumeration)
        dual_groups = {g.key: g for g in build_H_dual(p2_enumeration).groups}
        for group in H.groups:
            partner = dual_groups[group.key]
            assert len(group.relations) + len(partner.relations) == len(group.paths)

    def test_circle_loops(self, circle_enumeration):
        H = build_H(circle_enumeration)
        assert len(H.arrows) == 2
        loop = next(g for g in H.groups if g.is_loop)
        assert len(loop.paths) == 2
        assert loop.relations == [(Fraction(1), Fraction(-1))]

    def test_circle_dual_loops(self, circle_enumeration):
        H_dual = build_H_dual(circle_enumeration)
        loop = next(g for g in H_dual.groups if g.is_loop)
        assert loop.relations == [(Fraction(1), Fraction(1))]

    def test_squares_commute_and_anticommute(self, p2_enumeration):
        H, H_dual = build_H(p2_enumeration), build_H_dual(p2_enumeration)
        squares = [g for g in H.groups if not g.is_loop and len(g.paths) == 2]
        assert squares
        dual_groups = {g.key: g for g in H_dual.groups}
        for group in squares:
            assert group.relations == [(Fraction(1), Fraction(-1))]
            assert dual_groups[group.key].relations == [(Fraction(1), Fraction(1))]

    def test_single_paths_vanish_only_in_the_dual(self, p2_enumeration):
        H, H_dual = build_H(p2_enumeration), build_H_dual(p2_enumeration)
        singles = [g for g in H_dual.groups if len(g.paths) == 1]
        assert len(singles) == 18
        assert all(g.relations == [(Fraction(1),)] for g in singles)
        assert all(not g.relations for g in H.groups if len(g.paths) == 1)


class TestDerivePathRelations:
    """Path-space rows come from the symbolic relations."""

    def test_loop_rows_follow_the_base_relations(self, p2_enumeration):
        H = build_H(p2_enumeration)
        loop = next(g for g in H.groups if g.is_loop)
        coordinates = [H.arrows[first].coordinate for first, _ in loop.paths]
        for row in loop.relations:
            weights = [Fraction(0)] * H.n
            for value, i in zip(row, coordinates):
                weights[i] += value
            # weights lie in the column span of rho
            assert weights[0] == weights[1] == weights[2]

    def test_changed_symbolic_relation_changes_the_rows(self, p2_enumeration):
        H_dual = build_H_dual(p2_enumeration)
        index = next(i for i, r in enumerate(H_dual.relations) if r.kind == 'codim1bang')
        relation = H_dual.relations[index]
        (c1, w1), (c2, w2) = relation.terms
        H_dual.relations[index] = Relation(kind=relation.kind, source=relation.source,
                                           target=relation.target, terms=((c1, w1), (-c2, w2)))
        derive_path_relations(H_dual)
        changed = [g for g in H_dual.groups if g.relations == [(Fraction(1), Fraction(-1))]]
        assert len(changed) == 1

    def test_mixed_groups_raise(self, p2_enumeration):
        H = build_H(p2_enumeration)
        squares = [g for g in H.groups if not g.is_loop and len(g.paths) == 2]
        words = [H.path_name(squares[0].paths[0]), H.path_name(squares[1].paths[0])]
        H.relations.append(Relation(kind='codim1', source=squares[0].source,
                                    target=squares[0].target,
                                    terms=((Fraction(1), words[0]), (Fraction(-1), words[1]))))
        with pytest.raises(ValueError):
            derive_path_relations(H)
