"""
Command-line entry point for hypertoric-kit.

Reads a JSON problem spec, runs one command and writes a JSON report (or an
SVG / character-grid picture for `render`). Logs go to stderr.
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from aws_lambda_powertools import Logger
from dotenv import load_dotenv
from pydantic import ValidationError

from ..pipeline.runner import run
from ..utils.error_handler import EXIT_OK, format_error_for_response
from ..utils.exceptions import InvalidSpec
from ..utils.input_validator import validate_corpus_bounds, validate_spec
from .corpus import corpus_generate
from .spec_models import CorpusBounds, ProblemSpec

SERVICE = "hypertoric-kit"

SPEC_COMMANDS = [
    'analyze', 'chambers', 'quiver', 'ext', 'hilbert', 'koszul-check', 'tilting', 'render',
    'oracle', 'sweep',
]

logger = Logger(service=SERVICE, level=os.environ.get('HTK_LOG_LEVEL', 'INFO'),
                logger_handler=logging.StreamHandler(sys.stderr))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=SERVICE,
                                     description="Hypertoric category O combinatorics")
    subparsers = parser.add_subparsers(dest='command', required=True)

    for name in SPEC_COMMANDS:
        sub = subparsers.add_parser(name)
        sub.add_argument('--spec', required=True, help="Path of the JSON problem spec")
        sub.add_argument('--truncation', type=int, default=None, help="Highest degree Q")
        sub.add_argument('--seed', type=int, default=None, help="Perturbation seed")
        sub.add_argument('--out', default=None, help="Output file (default stdout)")
        sub.add_argument('--format', choices=['json', 'svg', 'ascii'], default='json')

    corpus = subparsers.add_parser('corpus')
    corpus.add_argument('--seed', type=int, default=0)
    corpus.add_argument('--count', type=int, default=1)
    corpus.add_argument('--bounds', default=None, help="Path of a JSON file of corpus bounds")
    corpus.add_argument('--out', default=None)
    return parser


def load_spec(path: str) -> ProblemSpec:
    """
    Read and validate a spec file.

    Raises:
        FileNotFoundError: If the file does not exist
        json.JSONDecodeError: If it is not JSON
        InvalidSpec: If validation fails
    """
    with open(path) as f:
        raw = json.load(f)
    if not validate_spec(raw):
        raise InvalidSpec(f"spec {path} failed validation", {'path': path})
    try:
        return ProblemSpec.model_validate(raw)
    except ValidationError as e:
        raise InvalidSpec(f"spec {path} failed validation: {e.error_count()} errors",
                          {'path': path, 'errors': json.loads(e.json())}) from e


def emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith('\n'):
            sys.stdout.write('\n')


def _run_corpus(args: argparse.Namespace) -> int:
    bounds_raw: Dict[str, Any] = {}
    if args.bounds:
        with open(args.bounds) as f:
            bounds_raw = json.load(f)
    if not validate_corpus_bounds(bounds_raw):
        raise InvalidSpec("corpus bounds failed validation", {'bounds': bounds_raw})
    specs = corpus_generate(args.seed, args.count, CorpusBounds(**bounds_raw))
    emit(json.dumps([s.to_json_dict() for s in specs], sort_keys=True, indent=2), args.out)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI.

    Args:
        argv: Arguments without the program name; sys.argv when omitted

    Returns:
        Exit code: 0 all checks pass, 1 a check failed, 2 invalid spec or usage
    """
    load_dotenv()
    logger.setLevel(os.environ.get('HTK_LOG_LEVEL', 'INFO'))
    args = build_parser().parse_args(argv)
    logger.append_keys(command=args.command)

    try:
        if args.command == 'corpus':
            return _run_corpus(args)
        spec = load_spec(args.spec)
    except Exception as e:
        response = format_error_for_response(e, args.command)
        emit(json.dumps(response, sort_keys=True, indent=2, default=str), args.out)
        return response['exit_code']

    logger.append_keys(spec_digest=spec.digest())
    logger.info(f"Running {args.command}")
    report = run(args.command, spec, {'truncation': args.truncation, 'seed': args.seed})

    render = report.results.get('render', {})
    if args.format in ('svg', 'ascii') and args.format in render:
        emit(render[args.format], args.out)
    else:
        if args.format != 'json':
            logger.warning(f"Format {args.format} is only available for a successful render")
        emit(report.to_json(), args.out)
    logger.info(f"Finished with exit code {report.exit_code}")
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
