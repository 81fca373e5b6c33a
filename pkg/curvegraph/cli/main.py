"""Argument parsing, dispatch, output rendering and exit codes."""

import argparse
import json
import sys
from typing import List, Optional, TextIO

from .. import __config__ as cfg
from ..attrdict import AttrDict, jsonable
from ..logger import logger
from ..utils import errors
from .commands import COMMANDS, CommandResult
from .config import FORMATS, RunConfig, tolerances

EXIT_OK, EXIT_VALIDATION, EXIT_NUMERICAL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so usage errors exit with 1."""

    def error(self, message):
        raise errors.BadParameters(message)


def _graph_input(parser: argparse.ArgumentParser, optional: bool = False):
    parser.add_argument(
        "inputs", nargs="?" if optional else 1, metavar="graph.json", help="graph document"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="curvegraph", description="Net total curvature of polygonal spatial graphs."
    )
    parser.add_argument("--version", action="version", version=cfg.__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        dest="output_format",
        choices=FORMATS,
        help="output format (text for ntc, json otherwise)",
    )
    common.add_argument(
        "--tol", action="append", metavar="NAME=VALUE", help="override a tolerance for this run"
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ntc", parents=[common], help="NTC and companion totals")
    _graph_input(p)
    p.add_argument("--functional", choices=("ntc", "tc", "ctc", "vtc", "all"), default="ntc")
    p.add_argument("--breakdown", action="store_true", help="per-vertex values")

    p = sub.add_parser("vertex", parents=[common], help="functionals of one vertex star")
    _graph_input(p, optional=True)
    p.add_argument("--tangents", help="'x,y,z;x,y,z;...'")
    p.add_argument("--vertex", help="vertex id of the graph file")
    p.add_argument("--mc-samples", type=int, dest="mc_samples")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("mu", parents=[common], help="nlm, mu and fibers in one direction")
    _graph_input(p)
    p.add_argument("--dir", required=True, help="'x,y,z'")
    p.add_argument("--levels", help="'s1,s2,...'")

    p = sub.add_parser("crofton", parents=[common], help="Crofton estimate of NTC")
    _graph_input(p)
    p.add_argument("--scheme", choices=("mc", "monte_carlo", "fibonacci"), default="monte_carlo")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--h5", help="save the result to an h5 file")

    p = sub.add_parser("heatmap", parents=[common], help="mu over a lon/lat grid")
    _graph_input(p)
    p.add_argument("--resolution", type=int, default=64)
    p.add_argument("--h5", help="save the grid to an h5 file")
    p.add_argument("--png", help="save a figure (needs matplotlib)")

    p = sub.add_parser("doublecover", parents=[common], help="double-cover circuits")
    _graph_input(p)
    p.add_argument("--circuits", type=int, default=1)
    p.add_argument("--nonreversing", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("minimize", parents=[common], help="flat-map minima")
    _graph_input(p, optional=True)
    p.add_argument("--family", help="e.g. complete:5, bipartite:3,3")
    p.add_argument("--combinatorial", action="store_true", help="use the graph file's combinatorics")
    p.add_argument("--exhaustive", action="store_true", help="also run the shape oracle")
    p.add_argument("--formula", action="store_true", help="compare with pi*(2B + k/2)")
    p.add_argument("--h5", help="save the result to an h5 file")

    sub.add_parser("catalog", parents=[common], help="closed-form minima of the families")

    p = sub.add_parser("gen", parents=[common], help="write a family as a graph document")
    p.add_argument("family")
    p.add_argument("--combinatorial", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("repro", parents=[common], help="reproduction experiments")
    p.add_argument("experiment", nargs="?", default="all")
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    namespace = build_parser().parse_args(argv)
    if isinstance(getattr(namespace, "inputs", None), str):
        namespace.inputs = [namespace.inputs]
    return RunConfig.from_namespace(namespace)


def render(result: CommandResult, output_format: str) -> str:
    if result.raw is not None:
        return result.raw
    if output_format == "csv":
        if result.csv is None:
            raise errors.BadParameters("This subcommand has no CSV output")
        return result.csv.rstrip("\n")
    report = result.report
    if output_format == "text":
        if hasattr(report, "text"):
            return report.text()
        return _plain_text(report)
    return report.to_json()


def _plain_text(report: AttrDict) -> str:
    scalars = [k for k, v in report.items() if isinstance(v, (int, float, str, bool))]
    lines = [report.output(sorted(scalars), max_length=1)]
    for key in sorted(set(report) - set(scalars)):
        lines.append(f"{key} = {json.dumps(jsonable(report[key]), sort_keys=True)}")
    return "\n".join(lines)


def run(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    """Run one subcommand and write its report to `stream`.

    Returns the exit status: 0 on success, 1 on a validation error, 2 when
    a numerical cross-check fails.
    """
    stream = stream or sys.stdout
    if config.command not in COMMANDS:
        logger.error("Unknown subcommand %r", config.command)
        return EXIT_VALIDATION
    try:
        with tolerances(config.tolerances):
            result = COMMANDS[config.command](config)
            text = render(result, config.output_format)
    except errors.GraphValidationError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_VALIDATION
    except errors.NumericalCheckFailed as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_NUMERICAL
    stream.write(text + "\n")
    return result.status


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except errors.GraphValidationError as exc:
        logger.error("%s", exc)
        return EXIT_VALIDATION
    return run(config)
