"""
design-spectra command line.

Usage:
  design-spectra validate <design>
  design-spectra construct <recipe> [-o out]
  design-spectra mim <d1> <d2> [--product none|mmt|mtm] [--format csv|json] [--char-poly] [-o out]
  design-spectra spectrum <d1> [d2] [--format json|text] [-o out]
  design-spectra graph <kind> <d1> [d2] [--s 1,2] [-o out]
  design-spectra paper-examples [--which 1|2|3|all]

Artifacts go to standard output or -o; logs and diagnostics go to standard error.
Exit codes: 0 success, 1 failed check or golden mismatch, 2 usage or parse
error, 3 invalid design or construction.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from dotenv import load_dotenv

from src.designs.core import validate_design
from src.designs.io import dump_design, load_design, read_design_data
from src.designs.recipes import build_from_recipe
from src.errors import CheckFailed, ConfigError, DesignSpectraError, GoldenMismatch, ParseError, UsageError
from src.graphs.builders import block_intersection_graph, merged_self_graph, mutual_incidence_graph, s_block_intersection_graph
from src.graphs.dot import export_dot
from src.incidence.mutual import mutual_matrix
from src.linalg.charpoly import char_poly
from src.linalg.export import matrix_to_csv, matrix_to_json, polynomial_to_json
from src.models.spectral_report import SpectralReport
from src.monitoring import configure_logging, write_metrics
from src.reproduction.runner import paper_examples, render
from src.spectral.verifier import self_spectrum, verify_spectrum
from src.utils.settings import Settings, get_settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

GRAPH_KINDS = ('mutual', 'merged-self', 'intersection', 's-intersection')


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog='design-spectra',
        description='Block designs, mutual incidence matrices and exact spectral verification'
    )
    parser.add_argument('--log-level', help='Root log level (overrides LOG_LEVEL)')
    parser.add_argument('--metrics-file', help='Write Prometheus metrics to this file')
    parser.add_argument('--oracle-max-blocks', type=int,
                        help='Largest b1 for the characteristic polynomial cross-check')
    sub = parser.add_subparsers(dest='command', required=True)

    validate = sub.add_parser('validate', help='Check a design file against the BIBD axioms')
    validate.add_argument('design')

    construct = sub.add_parser('construct', help='Build a design from a recipe or fixture name')
    construct.add_argument('recipe', help='e.g. fano, complete:7:3, cyclic:7:1,2,4, complete:7:3-fano')
    construct.add_argument('-o', '--output')

    mim = sub.add_parser('mim', help='Mutual incidence matrix of two designs')
    mim.add_argument('d1')
    mim.add_argument('d2')
    mim.add_argument('--product', choices=('none', 'mmt', 'mtm'), default='none')
    mim.add_argument('--format', choices=('csv', 'json'), default='csv')
    mim.add_argument('--char-poly', action='store_true',
                     help='Write the characteristic polynomial of the selected square matrix as JSON')
    mim.add_argument('-o', '--output')

    spectrum = sub.add_parser('spectrum', help='Verify the spectrum of M M^T (self-pair when d2 is omitted)')
    spectrum.add_argument('d1')
    spectrum.add_argument('d2', nargs='?')
    spectrum.add_argument('--format', choices=('json', 'text'), default='json')
    spectrum.add_argument('-o', '--output')

    graph = sub.add_parser('graph', help='Export a block graph as Graphviz DOT')
    graph.add_argument('kind', choices=GRAPH_KINDS)
    graph.add_argument('d1')
    graph.add_argument('d2', nargs='?')
    graph.add_argument('--s', dest='sizes', help='Comma-separated intersection sizes for s-intersection')
    graph.add_argument('-o', '--output')

    examples = sub.add_parser('paper-examples', help='Reproduce the published worked examples')
    examples.add_argument('--which', default='all', choices=('1', '2', '3', 'all'))

    return parser


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)


def _cmd_validate(args: argparse.Namespace, settings: Settings) -> int:
    v, blocks = read_design_data(args.design)
    report = validate_design(v, blocks)
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", None)
    if report.fisher_flagged:
        logger.warning("Trivial design: Fisher's inequality reported but not required",
                       extra={'path': args.design})
    if not report.ok:
        raise CheckFailed('validate', report.message or report.violation or '')
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace, settings: Settings) -> int:
    design = build_from_recipe(args.recipe)
    _emit(dump_design(design), args.output)
    return EXIT_OK


def _cmd_mim(args: argparse.Namespace, settings: Settings) -> int:
    m = mutual_matrix(load_design(args.d1), load_design(args.d2))
    matrix = {'none': lambda: m.m, 'mmt': m.mmt, 'mtm': m.mtm}[args.product]()
    if args.char_poly:
        if not matrix.is_square:
            raise UsageError("--char-poly needs a square matrix; use --product mmt or mtm")
        text = polynomial_to_json(char_poly(matrix))
    elif args.format == 'csv':
        text = matrix_to_csv(matrix)
    else:
        text = matrix_to_json(matrix)
    _emit(text, args.output)
    return EXIT_OK


def format_report_text(report: SpectralReport) -> str:
    """Human readable summary table of a spectral report."""
    lines = [
        f"d1 (v,b,r,k,lambda) = {report.d1_params.as_tuple()}",
        f"d2 (v,b,r,k,lambda) = {report.d2_params.as_tuple()}",
        f"mu1 = {report.mu1}  multiplicity {report.multiplicity_mu1}",
        f"mu2 = {report.mu2}  multiplicity {report.multiplicity_mu2}",
        f"kernel dimension = {report.kernel_dim}",
        f"diagonal = {report.diag_value}",
        f"rank M = {report.rank_m}  rank M M^T = {report.rank_mmt}",
        "",
    ]
    width = max(len(check.name) for check in report.checks) if report.checks else 5
    lines.append(f"{'check'.ljust(width)}  result")
    for check in report.checks:
        result = 'pass' if check.passed else f"FAIL {json.dumps(check.witness)}"
        lines.append(f"{check.name.ljust(width)}  {result}")
    lines.append(f"{'overall'.ljust(width)}  {'pass' if report.overall else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _cmd_spectrum(args: argparse.Namespace, settings: Settings) -> int:
    d1 = load_design(args.d1)
    if args.d2 is None:
        report = self_spectrum(d1, settings.oracle_max_blocks)
    else:
        report = verify_spectrum(d1, load_design(args.d2), settings.oracle_max_blocks)
    if args.format == 'json':
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    else:
        text = format_report_text(report)
    _emit(text, args.output)
    if not report.overall:
        raise CheckFailed(report.failed_checks[0].name, json.dumps(report.failed_checks[0].witness))
    return EXIT_OK


def parse_sizes(text: Optional[str]) -> List[int]:
    """Parse a comma list such as "1,2" into integers."""
    if not text:
        raise UsageError("s-intersection needs --s with at least one size, e.g. --s 1,2")
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise UsageError(f"--s must be a comma-separated list of integers, got '{text}'") from None


def _cmd_graph(args: argparse.Namespace, settings: Settings) -> int:
    if args.sizes is not None and args.kind != 's-intersection':
        raise UsageError(f"--s only applies to s-intersection, not graph {args.kind}")
    d1 = load_design(args.d1)
    if args.kind == 'mutual':
        if args.d2 is None:
            raise UsageError("graph mutual needs two design files")
        g = mutual_incidence_graph(d1, load_design(args.d2))
    elif args.d2 is not None:
        raise UsageError(f"graph {args.kind} takes a single design file")
    elif args.kind == 'merged-self':
        g = merged_self_graph(d1)
    elif args.kind == 'intersection':
        g = block_intersection_graph(d1)
    else:
        g = s_block_intersection_graph(d1, parse_sizes(args.sizes))
    _emit(export_dot(g), args.output)
    return EXIT_OK


def _cmd_paper_examples(args: argparse.Namespace, settings: Settings) -> int:
    outcomes = paper_examples(args.which, settings.oracle_max_blocks)
    _emit(render(outcomes), None)
    for outcome in outcomes:
        outcome.raise_for_mismatch()
    return EXIT_OK


COMMANDS = {
    'validate': _cmd_validate,
    'construct': _cmd_construct,
    'mim': _cmd_mim,
    'spectrum': _cmd_spectrum,
    'graph': _cmd_graph,
    'paper-examples': _cmd_paper_examples,
}


def exit_code_for(exc: DesignSpectraError) -> int:
    """Map a domain error to the documented exit code."""
    if isinstance(exc, (CheckFailed, GoldenMismatch)):
        return EXIT_CHECK_FAILED
    if isinstance(exc, (UsageError, ParseError, ConfigError)):
        return EXIT_USAGE
    return EXIT_DOMAIN


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None

    Returns:
        Process exit code
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        settings = get_settings().with_overrides(
            log_level=args.log_level.upper() if args.log_level else None,
            metrics_file=args.metrics_file,
            oracle_max_blocks=args.oracle_max_blocks,
        )
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(settings.log_level, settings.log_json)

    try:
        return COMMANDS[args.command](args, settings)
    except DesignSpectraError as exc:
        code = exit_code_for(exc)
        logger.error("Command failed", extra={'command': args.command, 'error': type(exc).__name__})
        print(f"error: {exc}", file=sys.stderr)
        return code
    finally:
        write_metrics(settings.metrics_file)


def main() -> None:
    """Console entry point."""
    load_dotenv()
    sys.exit(run())


if __name__ == '__main__':
    main()
