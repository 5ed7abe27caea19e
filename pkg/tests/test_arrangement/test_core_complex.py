"""
Tests for the Core Complex Module
"""

from src.arrangement.core_complex import core_complex, summarize


class TestSummarize:
    """Chamber and intersection summaries on the projective plane."""

    def test_top_triangle(self, p2_enumeration):
        summary = summarize(p2_enumeration, (0, 0, 0))
        assert summary.vertex_count == 3
        assert summary.dimension == 2
        assert summary.simple
        assert summary.h.h == (1, 1, 1)
        assert summary.oracle_agrees

    def test_middle_hexagon(self, p2_enumeration):
        summary = summarize(p2_enumeration, (0, 0, -1))
        assert summary.vertex_count == 6
        assert summary.h.h == (1, 4, 1)
        assert summary.sr == (1, 4, 1)

    def test_adjacent_intersection_is_a_segment(self, p2_enumeration):
        summary = summarize(p2_enumeration, (0, 0, -2), (0, 0, -1))
        assert summary.vertex_count == 2
        assert summary.dimension == summary.expected_dimension == 1
        assert summary.h.h == (1, 1)
        assert summary.to_dict()['chambers'] == [[0, 0, -2], [0, 0, -1]]

    def test_distant_chambers_do_not_meet(self, p2_enumeration):
        assert summarize(p2_enumeration, (0, 0, -2), (0, 0, 0)) is None


class TestCoreComplex:
    """Tests for core_complex."""

    def test_projective_plane(self, p2_enumeration):
        complex_ = core_complex(p2_enumeration)
        assert [c.vertex_count for c in complex_.components] == [3, 6, 3]
        assert [c.h.h for c in complex_.components] == [(1, 1, 1), (1, 4, 1), (1, 1, 1)]
        assert complex_.vertex_total == complex_.expected_vertex_total == 12
        assert complex_.incidence_holds
        assert complex_.warnings == []

    def test_to_dict(self, p2_enumeration):
        data = core_complex(p2_enumeration).to_dict()
        assert data['vertex_total'] == 12
        assert data['incidence_holds'] is True
        assert len(data['components']) == 3

    def test_circle(self, circle_enumeration):
        complex_ = core_complex(circle_enumeration)
        assert complex_.vertex_total == 2
        assert complex_.components[0].h.h == (1, 1)
        assert complex_.incidence_holds

    def test_pairwise_intersections(self, p2_enumeration):
        complex_ = core_complex(p2_enumeration)
        assert complex_.intersection_dimensions(0, 0) == []
        assert complex_.intersection_dimensions(0, 1) == [1, 1, 1]
        assert complex_.intersection_dimensions(1, 0) == [1, 1, 1]
        assert complex_.intersection_dimensions(0, 2) == [0, 0, 0]
        profile = complex_.codim_profile
        assert profile[1] >= 3 and profile[2] >= 3

    def test_circle_meets_its_translates(self, circle_enumeration):
        complex_ = core_complex(circle_enumeration)
        assert complex_.intersection_dimensions(0, 0) == [0, 0]
        assert complex_.to_dict()['pairwise'] == [{'from': 1, 'to': 1, 'dimensions': [0, 0]}]
