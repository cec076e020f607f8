"""Command line front end.

Subcommands: enumerate (list a family), map (apply the bijection either
way), poset (DOT/JSON export), census (CSV of counts by descent set), and
verify (run the check suite).  stdout is reserved for byte-deterministic
results; timings and errors go to stderr.  Exit status: 0 success, 1 data
or capacity error or a failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from itertools import islice
from typing import Iterable, Sequence

from .bijection import ncp_to_perm, perm_to_ncp
from .census import census_to_csv
from .errors import CapacityError
from .partitions import enumerate_ncp, format_partition, parse_partition
from .permutations import enumerate_av132, format_permutation, parse_permutation
from .poset import (
    build_descent_poset,
    build_refinement_poset,
    poset_to_dot,
    poset_to_json,
)
from .verify import CHECK_BOUNDS, CHECK_ORDER, run_checks


def _parse_checks(text: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    if not names:
        raise argparse.ArgumentTypeError("no checks given")
    known = ("all",) + CHECK_ORDER
    for name in names:
        if name not in known:
            raise argparse.ArgumentTypeError(
                f"unknown check {name!r} (known: {', '.join(known)})"
            )
    return names


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-posets",
        description=(
            "Noncrossing partitions, 132-avoiding permutations, the bijection "
            "between them, and the graded posets built on both families."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="list one family in canonical order")
    enum.add_argument("kind", choices=("av132", "ncp"), help="which family to list")
    enum.add_argument("--n", type=int, required=True, help="ground size")
    enum.add_argument(
        "--limit", type=_nonnegative_int, default=None, help="stop after this many lines"
    )
    enum.add_argument("--output", default=None, help="write here instead of stdout")

    map_cmd = sub.add_parser("map", help="apply the bijection in either direction")
    map_cmd.add_argument(
        "direction",
        choices=("f", "finv"),
        help="f maps a partition to its permutation, finv inverts",
    )
    map_cmd.add_argument("text", help="the element to map, in the text formats")

    poset = sub.add_parser("poset", help="export a poset as DOT or JSON")
    poset.add_argument(
        "family", choices=("P", "Q"), help="P: descent order; Q: refinement order"
    )
    poset.add_argument("--n", type=int, required=True, help="ground size")
    poset.add_argument("--format", choices=("dot", "json"), required=True)
    poset.add_argument("--output", default=None, help="write here instead of stdout")

    census = sub.add_parser(
        "census", help="CSV of 132-avoiding permutation counts by descent set"
    )
    census.add_argument("--n", type=int, required=True, help="ground size")
    census.add_argument("--output", default=None, help="write here instead of stdout")

    verify = sub.add_parser("verify", help="run verification checks")
    verify.add_argument(
        "--checks",
        type=_parse_checks,
        default=("all",),
        help="comma separated subset of: " + ", ".join(("all",) + CHECK_ORDER),
    )
    verify.add_argument("--n", type=int, required=True, help="ground size")
    return parser


def _write_lines(lines: Iterable[str], path: str | None) -> None:
    if path is None:
        for line in lines:
            sys.stdout.write(line + "\n")
    else:
        with open(path, "w", newline="") as handle:
            for line in lines:
                handle.write(line + "\n")


def _write_text(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.kind == "av132":
        lines = map(format_permutation, enumerate_av132(args.n))
    else:
        lines = map(format_partition, enumerate_ncp(args.n))
    if args.limit is not None:
        lines = islice(lines, args.limit)
    _write_lines(lines, args.output)
    return 0


def _cmd_map(args: argparse.Namespace) -> int:
    if args.direction == "f":
        result = format_permutation(ncp_to_perm(parse_partition(args.text)))
    else:
        result = format_partition(perm_to_ncp(parse_permutation(args.text)))
    sys.stdout.write(result + "\n")
    return 0


def _cmd_poset(args: argparse.Namespace) -> int:
    builder = build_descent_poset if args.family == "P" else build_refinement_poset
    poset = builder(args.n)
    text = poset_to_dot(poset) if args.format == "dot" else poset_to_json(poset)
    _write_text(text, args.output)
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    _write_text(census_to_csv(args.n), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if "all" in args.checks:
        names, clamp = CHECK_ORDER, True
    else:
        names, clamp = args.checks, False
    reports = run_checks(names, args.n, clamp=clamp)
    for report in reports:
        sys.stdout.write(report.summary_line() + "\n")
        for detail in report.violations:
            sys.stdout.write(f"  violation: {detail}\n")
        print(
            f"{report.name} n={report.n}: {report.elapsed:.3f}s", file=sys.stderr
        )
    return 0 if all(report.passed for report in reports) else 1


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "map": _cmd_map,
    "poset": _cmd_poset,
    "census": _cmd_census,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except CapacityError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())
