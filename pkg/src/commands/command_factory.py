"""
Command Factory Module

This module creates command objects by name.
"""

from typing import Any, List

from .chambers import ChambersCommand, SweepCommand
from .dimensions import ExtCommand, HilbertCommand, KoszulCheckCommand, OracleCommand
from .quiver import QuiverCommand
from .render import RenderCommand
from .tilting import TiltingCommand

STEP_COMMANDS: List[str] = [
    'chambers', 'quiver', 'ext', 'hilbert', 'koszul-check', 'oracle', 'tilting', 'render', 'sweep',
]


class CommandFactory:
    """Factory class for creating pipeline step commands."""

    def create_command(self, command_type: str) -> Any:
        """
        Create a command of the specified type.

        Args:
            command_type: Command name as used on the command line

        Returns:
            An instance with an `execute(context)` method

        Raises:
            ValueError: If an unsupported command type is requested
        """
        if command_type == 'chambers':
            return ChambersCommand()
        elif command_type == 'quiver':
            return QuiverCommand()
        elif command_type == 'ext':
            return ExtCommand()
        elif command_type == 'hilbert':
            return HilbertCommand()
        elif command_type == 'koszul-check':
            return KoszulCheckCommand()
        elif command_type == 'oracle':
            return OracleCommand()
        elif command_type == 'tilting':
            return TiltingCommand()
        elif command_type == 'render':
            return RenderCommand()
        elif command_type == 'sweep':
            return SweepCommand()
        else:
            raise ValueError(f"Unsupported command type: {command_type}")
