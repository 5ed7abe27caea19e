"""
Render Command Module

This module implements the `render` command for two-dimensional cosets.
"""

from typing import Any, Dict

from ..pipeline.context import AnalysisContext
from ..render.arrangement_svg import build_plane_view, render_ascii, render_svg
from ..utils.exceptions import InvalidSpec


class RenderCommand:
    """Picture of the arrangement with labelled chamber classes, as SVG and as text."""

    name = 'render'

    def execute(self, context: AnalysisContext) -> Dict[str, Any]:
        """
        Run the command.

        Args:
            context: Analysis context of the spec

        Returns:
            Dictionary with the view geometry, SVG text and character grid

        Raises:
            InvalidSpec: If n - k is not 2
        """
        if context.embedding.d != 2:
            raise InvalidSpec(f"render needs n - k = 2, got {context.embedding.d}",
                              {'n': context.embedding.n, 'k': context.embedding.k})
        view = build_plane_view(context.enumeration, radius=context.window)
        return {
            'passed': True,
            'view': view.to_dict(),
            'svg': render_svg(view),
            'ascii': render_ascii(view),
        }
