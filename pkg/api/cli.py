"""
kirchhoff: command-line front end.

  kirchhoff gen --family star --n 4 -o star4.txt
  kirchhoff exact -i star4.txt
  kirchhoff bounds --family sun --n 20 --format markdown
  kirchhoff verify -i graph.txt --tol 1e-8
  kirchhoff reproduce --table all
  kirchhoff compare -i a.txt --family complete:n=6 --family star:n=6
  kirchhoff minimum --n 5

Exit codes: 0 success, 1 failed verification or reproduction, 2 usage,
parse or infeasible-input errors.
"""
import argparse
import asyncio
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from config.settings import settings
from core.errors import (
    EdgeListParseError,
    GraphValidationError,
    InfeasibleFamilyError,
    KirchhoffError,
    TableDataError,
)
from core.graph.edge_list import to_edge_list, write_edge_list
from core.graph.generators import generate
from core.graph.models import FamilySpec, build_family_spec
from core.report.render import RENDERERS, render
from orchestrator.pipeline import run_analysis, run_comparison, run_minimum, run_reproduction

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

INPUT_ERRORS = (EdgeListParseError, GraphValidationError, InfeasibleFamilyError, TableDataError, OSError)

FAMILY_FLAGS = ("n", "r", "s", "n1", "a", "n2", "b", "depth")


def _add_family_flags(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("family")
    group.add_argument("--family", help="family name, or 'name:k=v,...' (e.g. circulant:n=8,offsets=1+3)")
    for flag in FAMILY_FLAGS:
        group.add_argument(f"--{flag}", type=int)
    group.add_argument("--offsets", help="circulant offsets, e.g. 1,3 or 1+3")


def _add_output_flags(parser: argparse.ArgumentParser):
    parser.add_argument("-o", "--output", type=Path, help="write to FILE instead of stdout")
    parser.add_argument("--format", choices=sorted(RENDERERS), default=settings.DEFAULT_FORMAT)


def _family_spec(args: argparse.Namespace) -> Optional[FamilySpec]:
    if not args.family:
        return None
    if ":" in args.family:
        return FamilySpec.parse(args.family)
    data: Dict[str, Any] = {"family": args.family}
    for flag in FAMILY_FLAGS:
        value = getattr(args, flag)
        if value is not None:
            data[flag] = value
    if args.offsets:
        try:
            data["offsets"] = tuple(int(o) for o in args.offsets.replace("+", ",").split(","))
        except ValueError as e:
            raise InfeasibleFamilyError(f"malformed offsets {args.offsets!r}") from e
    return build_family_spec(data)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kirchhoff",
        description="Exact additive degree-Kirchhoff index, its closed-form bounds, and table reproduction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a family graph as an edge list")
    _add_family_flags(gen)
    gen.add_argument("-o", "--output", type=Path, help="edge-list file to write (default stdout)")

    for name, help_text in (
        ("exact", "R, R* and R+ of one graph"),
        ("bounds", "every closed-form bound on one graph"),
        ("verify", "check the exact identities on one graph"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("-i", "--input", type=Path, help="edge-list file")
        _add_family_flags(cmd)
        _add_output_flags(cmd)
        cmd.add_argument("--tol", type=float, default=settings.VERIFY_TOL)

    reproduce = sub.add_parser("reproduce", help="set computed bounds against the published tables")
    reproduce.add_argument("--table", choices=["1", "2", "3", "4", "all"], default="all")
    _add_output_flags(reproduce)

    compare = sub.add_parser("compare", help="exact value and best bounds across several graphs")
    compare.add_argument("-i", "--input", type=Path, action="append", default=[], help="edge-list file (repeatable)")
    compare.add_argument("--family", action="append", default=[], help="'name:k=v,...' (repeatable)")
    _add_output_flags(compare)

    minimum = sub.add_parser("minimum", help="brute-force minimum of R+ over labeled connected graphs")
    minimum.add_argument("--n", type=int, required=True)
    minimum.add_argument("--partitions", type=int, default=None)
    minimum.add_argument("--workers", type=int, default=1)
    return parser


def _emit(text: str, output: Optional[Path]):
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = _family_spec(args)
    if spec is None:
        raise InfeasibleFamilyError("gen requires --family")
    g = generate(spec)
    if args.output is None:
        sys.stdout.write(to_edge_list(g))
    else:
        write_edge_list(g, args.output, comment=spec.label)
    return EXIT_OK


def _cmd_single(args: argparse.Namespace) -> int:
    spec = _family_spec(args)
    if (spec is None) == (args.input is None):
        raise InfeasibleFamilyError("give exactly one of -i/--input or --family")
    report = asyncio.run(
        run_analysis(
            file_path=args.input,
            family=spec.label if spec is not None else None,
            tasks=[args.command],
            tol=args.tol,
        )
    )
    _emit(render(report, args.format), args.output)
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_reproduce(args: argparse.Namespace) -> int:
    report = asyncio.run(run_reproduction(args.table))
    _emit(render(report, args.format), args.output)
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_compare(args: argparse.Namespace) -> int:
    families = [FamilySpec.parse(f).label for f in args.family]
    if not args.input and not families:
        raise InfeasibleFamilyError("compare needs at least one -i or --family")
    report = asyncio.run(run_comparison(files=args.input, families=families))
    _emit(render(report, args.format), args.output)
    return EXIT_OK


def _cmd_minimum(args: argparse.Namespace) -> int:
    if not 2 <= args.n <= 7:
        raise GraphValidationError("brute force supports 2 <= n <= 7")
    result = run_minimum(args.n, partitions=args.partitions, workers=args.workers)
    lines = [
        "n\tgraphs_checked\tmin_r_plus\tminimizers\targmin",
        f"{result.n}\t{result.graphs_checked}\t{result.min_r_plus:.12g}\t{len(result.minimizers)}\t"
        + " ".join(f"{u}-{v}" for u, v in result.argmin),
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


COMMANDS = {
    "gen": _cmd_gen,
    "exact": _cmd_single,
    "bounds": _cmd_single,
    "verify": _cmd_single,
    "reproduce": _cmd_reproduce,
    "compare": _cmd_compare,
    "minimum": _cmd_minimum,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args)
    except INPUT_ERRORS as e:
        print(f"❌ ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KirchhoffError as e:
        print(f"❌ ERROR: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
