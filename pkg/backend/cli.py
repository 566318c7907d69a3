"""Command-line front end for the Amoroso / log-gamma distribution library.

Subcommands:
    eval      Evaluate pdf, logpdf, cdf, sf or quantile at one or more points
    describe  Support, mode, moments, entropy, canonical parameters, catalog matches
    sample    Seeded draws, one per line
    curve     Tabulate quantities on an x grid (CSV by default)
    catalog   The catalog table, or one resolved entry
    check     Run the verification suites

Results go to stdout with 17 significant digits; log output goes to stderr.
Exit status: 0 success, 1 check-suite failure, 2 argument error, 3 rejected
distribution, parameters or arguments.

Example:
    $ python backend/cli.py eval --dist chi-square --param k=4 --x 2 --what cdf
    0.26424111765711533
"""

import argparse
import json
import logging
import os
import sys
from typing import Dict, List, Optional, Sequence

# Add src directory to Python path
backend_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(backend_dir, 'src'))
sys.path.insert(0, backend_dir)

from config.settings import DEFAULT_SEED, KS_SIGNIFICANCE
from core import catalog, distribution
from core.errors import ConvergenceError, DistributionError
from utils.formatting import format_number, frame_csv, frame_records, frame_text, json_number, summary_json, summary_text
from verify.report import render_json, render_lines
from verify.runner import DEFAULT_SAMPLES, SUITES, SuiteRunner

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_REJECTED = 3


class _ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose errors carry exit status 2 without a traceback."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    """Malformed arguments that argparse itself does not reject."""


def _named_params(pairs: Optional[Sequence[str]]) -> Dict[str, float]:
    named: Dict[str, float] = {}
    for pair in pairs or []:
        key, sep, value = pair.partition('=')
        if not sep or not key:
            raise UsageError(f"--param expects name=value, got {pair!r}")
        try:
            named[key.strip()] = float(value)
        except ValueError:
            raise UsageError(f"--param {key}: {value!r} is not a number")
    return named


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid seed: {text!r}')
    if value < 0:
        raise argparse.ArgumentTypeError(f'seed must be a non-negative integer, got {value}')
    return value


def _add_distribution_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument('--dist', required=True, help='Catalog name or synonym, e.g. "chi-square"')
    sub.add_argument(
        '--param', action='extend', nargs='+', default=[], metavar='NAME=VALUE',
        help='Entry parameters; omitted parameters take their catalog defaults',
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog='amoroso', description='Amoroso and log-gamma distributions')
    parser.add_argument('--verbose', action='store_true', help='Log at DEBUG level to stderr')
    subcommands = parser.add_subparsers(dest='command', required=True, parser_class=_ArgumentParser)

    evaluate = subcommands.add_parser('eval', help='Evaluate a distribution function')
    _add_distribution_args(evaluate)
    evaluate.add_argument('--x', action='extend', nargs='+', type=float, required=True, help='Evaluation points')
    evaluate.add_argument('--what', choices=distribution.QUANTITIES, default='pdf')
    evaluate.add_argument('--format', choices=('text', 'csv', 'json'), default='text')

    describe = subcommands.add_parser('describe', help='Summarize a distribution')
    _add_distribution_args(describe)
    describe.add_argument('--format', choices=('text', 'json'), default='text')

    sample = subcommands.add_parser('sample', help='Draw seeded variates')
    _add_distribution_args(sample)
    sample.add_argument('-n', '--count', type=int, default=10)
    sample.add_argument('--seed', type=int, default=DEFAULT_SEED)
    sample.add_argument('--format', choices=('text', 'json'), default='text')

    curve = subcommands.add_parser('curve', help='Tabulate functions of x on a grid')
    _add_distribution_args(curve)
    curve.add_argument('--from', dest='start', type=float, required=True)
    curve.add_argument('--to', dest='stop', type=float, required=True)
    curve.add_argument('--points', type=int, default=101)
    curve.add_argument('--what', default='pdf', help='Comma-separated subset of pdf,logpdf,cdf,sf')
    curve.add_argument('--format', choices=('text', 'csv', 'json'), default='csv')

    browse = subcommands.add_parser('catalog', help='Browse the catalog')
    browse.add_argument('--find', metavar='NAME', help='Resolve one name or synonym')
    browse.add_argument('--format', choices=('text', 'csv', 'json'), default='text')

    check = subcommands.add_parser('check', help='Run verification suites')
    check.add_argument('--suite', choices=SUITES, default='all')
    check.add_argument('--seed', type=_seed, default=DEFAULT_SEED)
    check.add_argument('--samples', type=int, default=DEFAULT_SAMPLES, help='Draws per KS check')
    check.add_argument('--significance', type=float, default=KS_SIGNIFICANCE)
    check.add_argument('--jobs', type=int, default=1, help='Checks run concurrently')
    check.add_argument('--format', choices=('text', 'json'), default='text')
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith('\n') else text + '\n')


def _cmd_eval(args: argparse.Namespace, named: Dict[str, float]) -> int:
    params = distribution.resolve(args.dist, named)
    values = distribution.evaluate(params, args.what, args.x)
    if args.format == 'json':
        _emit(json.dumps({
            'distribution': args.dist,
            'what': args.what,
            'x': [json_number(x) for x in args.x],
            'values': [json_number(v) for v in values],
        }, indent=2))
    elif args.format == 'csv':
        rows = ['x,' + args.what] + [f"{format_number(x)},{format_number(v)}" for x, v in zip(args.x, values)]
        _emit('\n'.join(rows))
    else:
        _emit('\n'.join(format_number(v) for v in values))
    return EXIT_OK


def _cmd_describe(args: argparse.Namespace, named: Dict[str, float]) -> int:
    entry = catalog.lookup(args.dist)
    params = distribution.resolve(args.dist, named)
    summary = distribution.describe(params)
    family = distribution.family_name(params)
    canonical = distribution.canonical_params(params)
    matches = catalog.classify(params)
    if args.format == 'json':
        document = json.loads(summary_json(entry.name, summary))
        document['family'] = family
        document['parameters'] = canonical
        document['matches'] = matches
        _emit(json.dumps(document, indent=2, ensure_ascii=False))
        return EXIT_OK
    arguments = ', '.join(f"{key}={format_number(value)}" for key, value in canonical.items())
    lines = [summary_text(f"{entry.name} = {family}({arguments})", summary), f"  matches  {', '.join(matches)}"]
    _emit('\n'.join(lines))
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace, named: Dict[str, float]) -> int:
    params = distribution.resolve(args.dist, named)
    draws = distribution.draw(params, args.count, args.seed)
    if args.format == 'json':
        _emit(json.dumps({'seed': args.seed, 'draws': [json_number(float(v)) for v in draws]}, indent=2))
    elif draws.size:
        _emit('\n'.join(format_number(float(v)) for v in draws))
    return EXIT_OK


def _cmd_curve(args: argparse.Namespace, named: Dict[str, float]) -> int:
    params = distribution.resolve(args.dist, named)
    quantities = [q.strip() for q in args.what.split(',') if q.strip()]
    frame = distribution.curve(params, args.start, args.stop, args.points, quantities)
    if args.format == 'json':
        _emit(json.dumps(frame_records(frame), indent=2))
    elif args.format == 'text':
        _emit(frame_text(frame))
    else:
        sys.stdout.write(frame_csv(frame))
    return EXIT_OK


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.find is None:
        _emit(catalog.export_table(args.format))
        return EXIT_OK
    entry = catalog.lookup(args.find)
    if args.format == 'json':
        _emit(json.dumps(entry.to_dict(), indent=2, ensure_ascii=False))
        return EXIT_OK
    lines = [
        f"name        {entry.name}",
        f"family      {entry.family.value}",
        f"parameters  {', '.join(entry.constraints()) or '-'}",
        f"mapping     {entry.mapping}",
        f"anchor      {entry.anchor}",
        f"synonyms    {'; '.join(entry.synonyms) or '-'}",
    ]
    if entry.parent:
        lines.append(f"parent      {entry.parent}")
    if entry.notes:
        lines.append(f"notes       {entry.notes}")
    _emit('\n'.join(lines))
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    runner = SuiteRunner(seed=args.seed, samples=args.samples, significance=args.significance, jobs=args.jobs)
    reports = runner.run(args.suite)
    _emit(render_json(reports) if args.format == 'json' else render_lines(reports))
    metrics = runner.get_metrics()
    logger.info(f"{metrics['passed']}/{metrics['total']} checks passed in {metrics['duration']:.2f}s")
    return EXIT_OK if metrics['failed'] == 0 else EXIT_CHECK_FAILED


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, execute one subcommand and return its exit status.

    Args:
        argv (List[str], optional): Arguments without the program name;
            defaults to ``sys.argv[1:]``

    Returns:
        int: 0, 1, 2 or 3 as documented in the module docstring
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(asctime)s [%(levelname)s] %(message)s',
        stream=sys.stderr,
        force=True,
    )

    try:
        if args.command == 'catalog':
            return _cmd_catalog(args)
        if args.command == 'check':
            return _cmd_check(args)
        named = _named_params(args.param)
        handler = {
            'eval': _cmd_eval,
            'describe': _cmd_describe,
            'sample': _cmd_sample,
            'curve': _cmd_curve,
        }[args.command]
        return handler(args, named)
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except (DistributionError, ConvergenceError) as e:
        logger.debug("Rejected request", exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_REJECTED


if __name__ == "__main__":
    sys.exit(run())
