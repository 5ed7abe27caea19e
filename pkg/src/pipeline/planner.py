"""
Planner Module

This module turns a command and its options into the list of pipeline steps
to execute, applying guardrails to the effective options.
"""

import logging
import os
from typing import Any, Dict, List, Optional

from ..commands.command_factory import STEP_COMMANDS

logger = logging.getLogger(__name__)

DEFAULT_MAX_TRUNCATION = 8

ANALYZE_STEPS = ['chambers', 'quiver', 'hilbert', 'koszul-check', 'oracle', 'tilting']


class CommandPlanner:
    """
    Resolves effective options and the steps of a command.

    Precedence of options: explicit override, then the spec's options block.
    """

    def __init__(self, guardrails: Optional[Dict[str, Any]] = None):
        """
        Initialize the planner.

        Args:
            guardrails: Limits on effective options; defaults read the environment
        """
        self.guardrails = guardrails or self._default_guardrails()

    def _default_guardrails(self) -> Dict[str, Any]:
        """
        Define default guardrails.

        Returns:
            Dictionary containing default guardrail configurations
        """
        return {
            'max_truncation': int(os.environ.get('HTK_MAX_TRUNCATION', DEFAULT_MAX_TRUNCATION)),
        }

    def plan(self, command: str, options: Dict[str, Any],
             overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Plan a run.

        Args:
            command: Command name
            options: Options from the spec
            overrides: Options given on the command line (None values are ignored)

        Returns:
            Dictionary with `steps` and effective `options`

        Raises:
            ValueError: If the command is unknown
        """
        effective = dict(options)
        for key, value in (overrides or {}).items():
            if value is not None:
                effective[key] = value
        effective = self._apply_guardrails(effective)
        steps = self._determine_steps(command)
        logger.info(f"Planned {command} as steps {steps}")
        return {'steps': steps, 'options': effective}

    def _apply_guardrails(self, options: Dict[str, Any]) -> Dict[str, Any]:
        limited = dict(options)
        cap = self.guardrails.get('max_truncation')
        if cap is not None and limited.get('truncation', 0) > cap:
            logger.warning(f"Truncation {limited['truncation']} exceeds {cap}; clamping")
            limited['truncation'] = cap
        return limited

    def _determine_steps(self, command: str) -> List[str]:
        if command == 'analyze':
            return list(ANALYZE_STEPS)
        if command in STEP_COMMANDS:
            return [command]
        raise ValueError(f"Unsupported command: {command}")
