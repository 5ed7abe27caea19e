"""
Chambers Command Module

This module implements the `chambers` and `sweep` commands: chamber classes,
adjacency, smoothness, the bases bound and the closed-chamber summaries.
"""

import logging
from typing import Any, Dict

from ..arrangement.core_complex import core_complex
from ..arrangement.enumeration import real_class_count, residue_sweep
from ..pipeline.context import AnalysisContext

logger = logging.getLogger(__name__)

SWEEP_AGREEMENT = 0.95


class ChambersCommand:
    """
    Enumerate chamber classes and check |Lambda-bar^R(lambda)| <= |bases|.

    The bases bound is the only gating check; the vertex incidence identity
    is reported for smooth parameters.
    """

    name = 'chambers'

    def execute(self, context: AnalysisContext) -> Dict[str, Any]:
        """
        Run the command.

        Args:
            context: Analysis context of the spec

        Returns:
            Dictionary with classes, arrows, smoothness, bounds and checks
        """
        enumeration = context.enumeration
        arrangement = context.arrangement
        smoothness = context.smoothness
        labels = [c.label for c in enumeration.classes]

        classes = [
            {
                'label': c.label,
                'key': list(c.key),
                'witness': list(c.witness) if c.witness is not None else None,
                'lattice_points': [list(a) for a in arrangement.lattice_points(c.representative)],
            }
            for c in enumeration.classes
        ]
        multiplicities = []
        for source in range(len(labels)):
            for target in range(len(labels)):
                count = enumeration.graph.multiplicity(source, target)
                if count:
                    multiplicities.append({'source': labels[source], 'target': labels[target],
                                           'arrows': count})

        real_count = real_class_count(arrangement)
        bases_count = len(arrangement.bases)
        bounded = real_count <= bases_count
        if not bounded:
            logger.error(f"Bases bound violated: {real_count} real classes, {bases_count} bases")

        complex_ = core_complex(enumeration)
        checks = {'bases_bound': bounded}
        if smoothness.smooth:
            checks['vertex_incidence'] = complex_.incidence_holds

        return {
            'passed': bounded,
            'class_count': len(enumeration),
            'classes': classes,
            'adjacency': multiplicities,
            'arrows': [
                {'source': labels[e.source], 'target': labels[e.target],
                 'coordinate': e.coordinate + 1, 'sign': e.sign}
                for e in enumeration.graph.edges
            ],
            'alpha_size_two': [{'class': labels[x], 'coordinate': i + 1}
                               for x, i in enumeration.alpha_size_two()],
            'smoothness': smoothness.to_dict(),
            'bases': [sorted(i + 1 for i in b) for b in arrangement.bases],
            'real_class_count': real_count,
            'core_complex': complex_.to_dict(),
            'checks': checks,
            'warnings': context.warnings(),
        }


class SweepCommand:
    """Class counts and smoothness over every lambda modulo p."""

    name = 'sweep'

    def execute(self, context: AnalysisContext) -> Dict[str, Any]:
        rows = residue_sweep(context.embedding, context.spec.p, seed=context.seed)
        disagreements = [r['lambda'] for r in rows if r['disagreement']]
        agreement = 1 - len(disagreements) / len(rows)
        if disagreements:
            logger.warning(f"Smoothness tests disagree at lambda in {disagreements}")
        return {
            'passed': agreement >= SWEEP_AGREEMENT,
            'rows': rows,
            'bases_count': len(context.arrangement.bases),
            'agreement': agreement,
            'disagreements': disagreements,
            'checks': {'smoothness_agreement': agreement >= SWEEP_AGREEMENT},
        }
