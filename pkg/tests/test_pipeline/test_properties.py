"""
Property sweeps over a fixed generated corpus and the projective plane
"""

from itertools import product

import pytest

from src.algebra.checks import compare_routes, koszulity_check, quadratic_duality_check
from src.algebra.dimensions import hilbert_matrix_H, hilbert_matrix_H_dual
from src.algebra.oracle import truncated_dims_oracle
from src.algebra.presentation import build_H, build_H_dual
from src.arrangement.enumeration import enumerate_classes, real_class_count, residue_sweep
from src.arrangement.parameter import make_parameter
from src.arrangement.periodic import PeriodicArrangement
from src.cli.corpus import corpus_generate
from src.cli.spec_models import CorpusBounds
from src.commands.dimensions import toric_agreement
from src.lattice.embedding import validate_embedding
from src.pipeline.context import AnalysisContext
from src.tilting.bundle import (
    degree_table,
    verify_end_iso,
    verify_general_relation,
    verify_reverse_shadow,
)

CORPUS_SEED = 2024
CORPUS_SIZE = 20
RECIPROCITY_SIZE = 10
BOUNDS = CorpusBounds(n_min=2, n_max=4, k_max=2, p_max=7, entry_max=2)


@pytest.fixture(scope="module")
def corpus():
    return corpus_generate(CORPUS_SEED, CORPUS_SIZE, BOUNDS)


@pytest.fixture(scope="module")
def contexts(corpus):
    return [AnalysisContext(spec, truncation=4) for spec in corpus]


class TestCorpus:
    """The corpus itself covers every rank."""

    def test_shape(self, corpus):
        assert len(corpus) == CORPUS_SIZE
        assert {s.rank for s in corpus} == {0, 1, 2}
        assert all(s.n <= 5 and s.p <= 7 for s in corpus)


class TestQuadraticDualityProperty:
    """H and H! are quadratic duals on every corpus instance."""

    @pytest.mark.parametrize('index', range(CORPUS_SIZE))
    def test_duality(self, contexts, index):
        context = contexts[index]
        report = quadratic_duality_check(context.H, context.H_dual)
        assert report.passed


class TestReciprocityProperty:
    """Euler-form reciprocity to degree six."""

    @pytest.mark.parametrize('index', range(RECIPROCITY_SIZE))
    def test_reciprocity_to_degree_six(self, corpus, index):
        context = AnalysisContext(corpus[index], truncation=6)
        report = koszulity_check(context.hilbert_H, context.hilbert_H_dual, 6)
        assert report.passed

    def test_projective_plane_to_degree_six(self, p2_spec):
        context = AnalysisContext(p2_spec, truncation=6)
        assert koszulity_check(context.hilbert_H, context.hilbert_H_dual, 6).passed


class TestBasesBound:
    """|classes| <= |bases| at every parameter, smooth or not."""

    @pytest.mark.parametrize('index', range(CORPUS_SIZE))
    def test_every_residue(self, corpus, index):
        spec = corpus[index]
        embedding = validate_embedding(spec.rho, n=spec.n, k=spec.rank)
        for lam in product(range(spec.p), repeat=spec.rank):
            arrangement = PeriodicArrangement(embedding, make_parameter(lam, spec.p))
            bound = len(arrangement.bases)
            assert len(enumerate_classes(arrangement, verify=False)) <= bound
            assert real_class_count(arrangement) <= bound

    def test_projective_plane_sweep(self):
        rows = residue_sweep(validate_embedding([[1], [1], [1]]), 5)
        assert [row['smooth'] for row in rows] == [True, True, True, False, False]
        assert all(row['classes'] <= 3 for row in rows)
        assert all((row['classes'] == 3) == row['smooth'] for row in rows)


class TestToricOracleAgreement:
    """h-vectors equal face-ring dimensions on every chamber intersection."""

    @pytest.mark.parametrize('index', range(CORPUS_SIZE))
    def test_agreement(self, contexts, index):
        result = toric_agreement(contexts[index])
        assert result['checked'] > 0
        assert result['mismatches'] == []


class TestTiltingProperty:
    """Monomial section identities on 100 random chamber pairs per instance."""

    @pytest.mark.parametrize('index', range(CORPUS_SIZE))
    def test_sections(self, contexts, index):
        context = contexts[index]
        general = verify_general_relation(context.enumeration, 100, seed=context.seed)
        shadow = verify_reverse_shadow(context.enumeration, 100, seed=context.seed)
        assert general.checked == shadow.checked == 100
        assert general.passed and shadow.passed
        assert verify_end_iso(context.H).passed

    @pytest.mark.parametrize('index', range(0, CORPUS_SIZE, 4))
    def test_degree_table(self, contexts, index):
        table = degree_table(contexts[index].enumeration, 3)
        assert table
        assert all(row['matches'] for row in table)


class TestProjectivePlaneRoutes:
    """Closed form, toric count and oracle agree to degree four."""

    def test_three_routes(self, p2_enumeration):
        hom = hilbert_matrix_H(p2_enumeration, 4)
        ext = hilbert_matrix_H_dual(p2_enumeration, 4)
        assert compare_routes(hom, truncated_dims_oracle(build_H(p2_enumeration), 4))['agree']
        assert compare_routes(ext, truncated_dims_oracle(build_H_dual(p2_enumeration), 4))['agree']
        assert hom.entry(0, 0) == [1, 0, 8, 0, 27]
        assert hom.entry(0, 1) == [0, 3, 0, 15, 0]
        assert ext.entry(0, 0) == [1, 0, 1, 0, 1]
        assert ext.entry(0, 1) == [0, 3, 0, 3, 0]
        assert ext.entry(0, 2) == [0, 0, 3, 0, 0]
