"""
Error Handler Module

This module turns exceptions raised by the pipeline into report entries and
CLI exit codes.
"""

import logging
import traceback
from typing import Any, Dict

from .exceptions import HypertoricError, InvalidSpec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_SPEC = 2

SUGGESTIONS = {
    'InvalidSpec': 'Check the spec file against the documented fields',
    'RankDeficient': 'The columns of rho must be linearly independent',
    'NonSaturated': 'rho^T must map Z^n onto Z^k; replace rho by a saturated basis',
    'NotInCoset': 'lambda must have k integer entries',
    'DegeneratePerturbation': 'Try another --seed',
    'DegenerateFunctional': 'Try another --seed',
    'EmptyIntersection': 'The two closed chambers do not meet',
    'NotSimple': 'The parameter is probably not smooth',
    'TruncationTooLarge': 'Lower --truncation or raise HTK_MAX_CELLS',
    'DualityFailure': 'Check smoothness of the parameter',
    'ReciprocityFailure': 'Check smoothness of the parameter',
    'RelationMismatch': 'A relation instance does not hold on monomial sections',
    'ExhaustedRejectionBudget': 'Relax the corpus bounds or raise the attempt budget',
    'ValidationError': 'Check the spec file against the documented fields',
    'JSONDecodeError': 'Check that the spec is valid JSON',
    'FileNotFoundError': 'Check the --spec path',
}


def handle_error(error: Exception, command: str = 'unknown') -> Dict[str, Any]:
    """
    Log an error and describe it for the run report.

    Args:
        error: The exception that occurred
        command: Command or pipeline step that raised it

    Returns:
        Dictionary with the message, type, suggestion and context
    """
    logger.error(f"Error in {command}: {error}")
    logger.debug(traceback.format_exc())

    error_type = type(error).__name__
    return {
        'command': command,
        'error': str(error),
        'error_type': error_type,
        'suggestion': SUGGESTIONS.get(error_type, 'Check the logs for more information'),
        'context': getattr(error, 'context', {}) or {},
    }


def exit_code_for(error: Exception) -> int:
    """2 for unusable input, 1 for everything else."""
    if isinstance(error, (InvalidSpec, FileNotFoundError)):
        return EXIT_INVALID_SPEC
    if type(error).__name__ in ('ValidationError', 'JSONDecodeError'):
        return EXIT_INVALID_SPEC
    if isinstance(error, HypertoricError) and type(error).__name__ in (
        'RankDeficient', 'NonSaturated', 'NotInCoset'
    ):
        return EXIT_INVALID_SPEC
    return EXIT_CHECK_FAILED


def format_error_for_response(error: Exception, command: str = 'unknown') -> Dict[str, Any]:
    """
    Wrap an error as a complete CLI response.

    Args:
        error: The exception that occurred
        command: Command that raised it

    Returns:
        Dictionary with exit_code and the error body
    """
    return {
        'exit_code': exit_code_for(error),
        'command': command,
        'passed': False,
        'error': handle_error(error, command),
    }
