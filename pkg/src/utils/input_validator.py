"""
Input Validator Module

This module screens raw spec and corpus-bound dictionaries before they are
parsed into models, logging every problem it finds.
"""

import logging
from typing import Any, Dict

logger = logging.getLogger(__name__)

SPEC_FIELDS = {'rho', 'lambda', 'lam', 'p', 'n', 'k', 'options', 'name'}
OPTION_FIELDS = {'truncation', 'seed', 'window'}
BOUND_LIMITS = {'n_max': 6, 'k_max': 3, 'p_max': 11, 'entry_max': 3}


def _is_integer(value: Any) -> bool:
    if isinstance(value, bool):
        return False
    if isinstance(value, int):
        return True
    if isinstance(value, str):
        text = value.strip()
        return text.lstrip('+-').isdigit()
    return False


def validate_spec(input_data: Dict[str, Any]) -> bool:
    """
    Validate a raw problem spec.

    Args:
        input_data: Parsed JSON of a spec file

    Returns:
        True if the spec is well formed, False otherwise
    """
    if not isinstance(input_data, dict):
        logger.error("Spec is not a JSON object")
        return False

    valid = True
    unknown = set(input_data) - SPEC_FIELDS
    if unknown:
        logger.error(f"Unknown spec fields: {sorted(unknown)}")
        valid = False

    for field in ('rho', 'p'):
        if field not in input_data:
            logger.error(f"Required field '{field}' is missing")
            valid = False
    if 'lambda' not in input_data and 'lam' not in input_data:
        logger.error("Required field 'lambda' is missing")
        valid = False
    if not valid:
        return False

    rho = input_data['rho']
    if not isinstance(rho, list) or not rho or not all(isinstance(r, list) for r in rho):
        logger.error("rho must be a non-empty list of rows")
        return False
    if len({len(r) for r in rho}) > 1:
        logger.error("rho rows have different lengths")
        valid = False
    if not all(_is_integer(v) for row in rho for v in row):
        logger.error("rho entries must be integers (or integer strings)")
        valid = False
    if 'n' in input_data and (not _is_integer(input_data['n']) or int(input_data['n']) != len(rho)):
        logger.error(f"n = {input_data['n']} but rho has {len(rho)} rows")
        valid = False

    lam = input_data.get('lambda', input_data.get('lam'))
    if not isinstance(lam, list) or not all(_is_integer(v) for v in lam):
        logger.error("lambda must be a list of integers")
        valid = False
    elif rho[0] and len(lam) != len(rho[0]):
        logger.error(f"lambda has length {len(lam)} but rho has {len(rho[0])} columns")
        valid = False

    p = input_data['p']
    if not _is_integer(p) or int(p) < 2:
        logger.error("p must be an integer >= 2")
        valid = False

    options = input_data.get('options', {})
    if not isinstance(options, dict):
        logger.error("options must be an object")
        return False
    unknown = set(options) - OPTION_FIELDS
    if unknown:
        logger.error(f"Unknown options: {sorted(unknown)}")
        valid = False
    for field in ('truncation', 'window'):
        if field in options and (not _is_integer(options[field]) or int(options[field]) < 0):
            logger.error(f"options.{field} must be a non-negative integer")
            valid = False
    if 'seed' in options and not _is_integer(options['seed']):
        logger.error("options.seed must be an integer")
        valid = False

    return valid


def validate_corpus_bounds(input_data: Dict[str, Any]) -> bool:
    """
    Validate raw corpus bounds.

    Args:
        input_data: Bound overrides (n_min, n_max, k_min, k_max, p_max, entry_max)

    Returns:
        True if every bound is an integer within its limit, False otherwise
    """
    if not isinstance(input_data, dict):
        logger.error("Corpus bounds are not a dictionary")
        return False

    for field, value in input_data.items():
        if field not in BOUND_LIMITS and field not in ('n_min', 'k_min'):
            logger.error(f"Unknown corpus bound '{field}'")
            return False
        if not _is_integer(value) or int(value) < 0:
            logger.error(f"Corpus bound '{field}' must be a non-negative integer")
            return False
        limit = BOUND_LIMITS.get(field)
        if limit is not None and int(value) > limit:
            logger.error(f"Corpus bound '{field}' = {value} exceeds {limit}")
            return False

    return True
