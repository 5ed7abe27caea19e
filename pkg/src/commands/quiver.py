"""
Quiver Command Module

This module implements the `quiver` command: presentations of H and H! on
the chamber-class quiver and the quadratic duality check between them.
"""

import logging
from typing import Any, Dict

from ..algebra.checks import quadratic_duality_check
from ..pipeline.context import AnalysisContext

logger = logging.getLogger(__name__)


class QuiverCommand:
    """Quadratic presentations of H and H! with their duality check."""

    name = 'quiver'

    def execute(self, context: AnalysisContext) -> Dict[str, Any]:
        """
        Run the command.

        Args:
            context: Analysis context of the spec

        Returns:
            Dictionary with both presentations and the duality report
        """
        H, H_dual = context.H, context.H_dual
        duality = quadratic_duality_check(H, H_dual, raise_on_failure=False)
        logger.info(f"Quiver with {len(H.labels)} vertices and {len(H.arrows)} arrows per algebra")
        return {
            'passed': duality.passed,
            'H': H.to_dict(),
            'H_dual': H_dual.to_dict(),
            'duality': duality.to_dict(),
            'checks': {'quadratic_duality': duality.passed},
            'warnings': sorted(set(H.warnings) | set(H_dual.warnings)),
        }
