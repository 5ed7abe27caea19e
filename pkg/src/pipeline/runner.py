"""
Pipeline Runner Module

This module executes the planned steps of a command against one analysis
context and assembles the run report.
"""

import logging
import os
import time
from typing import Any, Dict, List, Optional

from ..cache.cache_manager import CacheManager, make_key
from ..cli.spec_models import ProblemSpec, RunReport
from ..commands.command_factory import CommandFactory
from ..utils.error_handler import EXIT_CHECK_FAILED, EXIT_OK, exit_code_for, handle_error
from .context import AnalysisContext
from .planner import CommandPlanner

logger = logging.getLogger(__name__)

REPORT_VERSION = 1


def runner_config_from_env() -> Dict[str, Any]:
    """Runner configuration from HTK_* environment variables."""
    return {
        'use_cache': os.environ.get('HTK_USE_CACHE', 'true').lower() == 'true',
        'include_timings': os.environ.get('HTK_INCLUDE_TIMINGS', 'false').lower() == 'true',
        'cache_config': {
            'ttl': int(os.environ.get('HTK_CACHE_TTL', '3600')),
        },
    }


class PipelineRunner:
    """
    Executes steps one by one, caching each step result.

    A failing step is recorded and the remaining steps still run.
    """

    def __init__(self, use_cache: bool = True, include_timings: bool = False, **kwargs):
        """
        Initialize the runner.

        Args:
            use_cache: Whether to cache step results
            include_timings: Whether to record wall-clock seconds per step
            **kwargs: Additional configuration options (cache_config)
        """
        self.use_cache = use_cache
        self.include_timings = include_timings
        self.command_factory = CommandFactory()
        if self.use_cache:
            self.cache_manager = CacheManager(**kwargs.get('cache_config', {}))

    def process_request(self, context: AnalysisContext, steps: List[str]) -> Dict[str, Any]:
        """
        Execute the steps against a context.

        Args:
            context: Analysis context of the spec
            steps: Step names in execution order

        Returns:
            Dictionary with per-step results, exit codes and timings
        """
        logger.info(f"Processing steps: {steps}")
        outcome: Dict[str, Any] = {'results': {}, 'exit_codes': {}, 'timings': {}}

        for step in steps:
            cache_key = self._generate_cache_key(context, step)
            if self.use_cache:
                cached_result = self.cache_manager.get(cache_key)
                if cached_result is not None:
                    logger.info(f"Cache hit for step {step}")
                    outcome['results'][step] = cached_result
                    outcome['exit_codes'][step] = EXIT_OK if cached_result['passed'] \
                        else EXIT_CHECK_FAILED
                    continue

            started = time.perf_counter()
            try:
                command = self.command_factory.create_command(step)
                result = command.execute(context)
                outcome['exit_codes'][step] = EXIT_OK if result['passed'] else EXIT_CHECK_FAILED
                if self.use_cache:
                    self.cache_manager.set(cache_key, result)
            except Exception as e:
                logger.error(f"Error executing step {step}: {str(e)}")
                result = {'passed': False, 'error': handle_error(e, step)}
                outcome['exit_codes'][step] = exit_code_for(e)
            outcome['results'][step] = result
            outcome['timings'][step] = round(time.perf_counter() - started, 4)

        return outcome

    def _generate_cache_key(self, context: AnalysisContext, step: str) -> str:
        """
        Generate a cache key from the spec and the effective options.

        Args:
            context: Analysis context of the spec
            step: Step name

        Returns:
            Cache key as a string
        """
        return make_key({
            'spec': context.spec.to_json_dict(),
            'step': step,
            'truncation': context.truncation,
            'seed': context.seed,
            'window': context.window,
        })


def _provenance(context: AnalysisContext, results: Dict[str, Any]) -> Dict[str, Any]:
    routes = {step: r['routes'] for step, r in results.items() if r.get('routes')}
    checks = {step: r['checks'] for step, r in results.items() if 'checks' in r}
    return {
        'version': REPORT_VERSION,
        'seed': context.seed,
        'truncation': context.truncation,
        'window': context.window,
        'routes': routes,
        'checks': checks,
    }


def _collect_warnings(context: AnalysisContext, results: Dict[str, Any]) -> List[str]:
    found = set()
    try:
        found.update(context.warnings())
    except Exception:
        logger.debug("No context warnings available")
    for result in results.values():
        found.update(result.get('warnings', []))
    return sorted(found)


def run(command: str, spec: ProblemSpec, overrides: Optional[Dict[str, Any]] = None,
        runner: Optional[PipelineRunner] = None) -> RunReport:
    """
    Run one command on a spec.

    Args:
        command: analyze, chambers, quiver, ext, hilbert, koszul-check, oracle,
            tilting, render or sweep
        spec: Validated problem spec
        overrides: Command-line options (truncation, seed, window)
        runner: Runner to use; built from the environment when omitted

    Returns:
        RunReport; exit_code 0 iff every step passed

    Raises:
        ValueError: If the command is unknown
    """
    plan = CommandPlanner().plan(command, spec.options.model_dump(), overrides)
    options = plan['options']
    context = AnalysisContext(spec, truncation=options['truncation'], seed=options['seed'],
                              window=options['window'])
    digest = spec.digest()

    try:
        context.prepare()
    except Exception as e:
        error = handle_error(e, command)
        return RunReport(command=command, passed=False, exit_code=exit_code_for(e),
                         spec_digest=digest, results={'error': error},
                         provenance=_provenance(context, {}))

    runner = runner or PipelineRunner(**runner_config_from_env())
    outcome = runner.process_request(context, plan['steps'])
    exit_code = max(outcome['exit_codes'].values(), default=EXIT_OK)
    passed = exit_code == EXIT_OK
    logger.info(f"Command {command} finished with exit code {exit_code}")

    return RunReport(
        command=command,
        passed=passed,
        exit_code=exit_code,
        spec_digest=digest,
        results=outcome['results'],
        provenance=_provenance(context, outcome['results']),
        warnings=_collect_warnings(context, outcome['results']),
        timings=outcome['timings'] if runner.include_timings else None,
    )
