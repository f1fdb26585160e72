"""Command-line front end.

Four subcommands cover the library surface:

* ``count``      exact counts via closed forms, recursion, convolution, or
                 streaming enumeration
* ``enumerate``  list the selections themselves
* ``bijection``  map a two-circle selection onto the combined circle and back,
                 optionally with the full switch trace
* ``verify``     sweep the identity checks over a parameter grid

Counts are printed as exact decimal strings (never floats), output for a fixed
invocation is byte-deterministic, and exit codes are stable: 0 success,
1 failed verification, 2 usage error, 3 parameter outside an operation's
precondition (the violated bound is named on stderr).
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys

from .bijection import zag, zig
from .core import (CircleSystem, DomainError, Element, SelectionSet,
                   SeparationParams, flatten, format_flat_selection,
                   parse_element, parse_flat_selection, parse_selection,
                   unflatten)
from .counting import (count_system, count_system_convolution,
                       count_system_fixed, count_system_fixed_recursive)
from .enumeration import EnumerationRequest, count_by_enumeration, enumerate_gap
from .verify import (CHECKS, SweepGrid, overall_pass, render_table,
                     to_json_lines, verify_all)


def _sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated circle sizes, got {text!r}") from None
    if not sizes or any(n < 1 for n in sizes):
        raise argparse.ArgumentTypeError("circle sizes must be positive integers")
    return sizes


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circsep",
        description="Count, enumerate, and bijectively map s-separated "
                    "selections on systems of circles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="exact count of s-separated k-selections")
    p_count.add_argument("--sizes", type=_sizes, required=True,
                         help="comma-separated circle sizes, e.g. 8,7")
    p_count.add_argument("--s", type=_nonneg, required=True,
                         help="separation distance")
    p_count.add_argument("--k", type=_nonneg, required=True,
                         help="selection size")
    p_count.add_argument("--fixed", type=parse_element, default=None,
                         metavar="POS@CIRCLE",
                         help="count only selections through this element")
    p_count.add_argument("--method",
                         choices=("closed", "recursive", "convolution", "enumerate"),
                         default="closed")
    p_count.add_argument("--format", choices=("text", "json"), default="text")

    p_enum = sub.add_parser("enumerate", help="list s-separated k-selections")
    p_enum.add_argument("--sizes", type=_sizes, required=True)
    p_enum.add_argument("--s", type=_nonneg, required=True)
    p_enum.add_argument("--k", type=_nonneg, required=True)
    p_enum.add_argument("--fixed", type=parse_element, default=None,
                        metavar="POS@CIRCLE")
    p_enum.add_argument("--limit", type=_nonneg, default=None,
                        help="stop after this many selections")
    p_enum.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")

    p_bij = sub.add_parser("bijection",
                           help="map a selection across the two-circle/one-circle "
                                "bijection")
    p_bij.add_argument("direction", choices=("forward", "backward"))
    p_bij.add_argument("--sizes", type=_sizes, required=True,
                       help="the two circle sizes, e.g. 4,3")
    p_bij.add_argument("--s", type=_nonneg, required=True)
    p_bij.add_argument("--set", required=True, dest="selection",
                       help="forward: POS@CIRCLE list, e.g. 1@1,3@2; "
                            "backward: bare positions on the combined circle, "
                            "e.g. 1,4")
    p_bij.add_argument("--trace", action="store_true",
                       help="also print the switch trace as JSON")
    p_bij.add_argument("--format", choices=("text", "json"), default="text")

    p_ver = sub.add_parser("verify", help="sweep the identity checks over a grid")
    p_ver.add_argument("--checks", default=None, metavar="LIST",
                       help=f"comma-separated subset of: {', '.join(CHECKS)}")
    p_ver.add_argument("--max-size", type=_positive, default=10)
    p_ver.add_argument("--max-k", type=_positive, default=3)
    p_ver.add_argument("--max-s", type=_positive, default=2)
    p_ver.add_argument("--jobs", type=_positive, default=1)
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _json_dump(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _cmd_count(args, parser: argparse.ArgumentParser) -> int:
    system = CircleSystem(args.sizes)
    fixed = args.fixed
    if fixed is not None and fixed not in system:
        parser.error(f"--fixed {fixed} does not exist in system {list(args.sizes)}")
    if args.method == "recursive":
        if fixed != Element(1, 1):
            parser.error("--method recursive computes the count through the "
                         "first element only; it requires --fixed 1@1")
        value = count_system_fixed_recursive(system, args.s, args.k)
    elif args.method == "convolution":
        if fixed is not None:
            parser.error("--method convolution computes the free count; "
                         "it does not accept --fixed")
        value = count_system_convolution(system, args.s, args.k)
    elif args.method == "enumerate":
        value = count_by_enumeration(EnumerationRequest(
            system, SeparationParams(args.s, args.k), fixed))
    elif fixed is not None:
        value = count_system_fixed(system, args.s, args.k, fixed)
    else:
        value = count_system(system, args.s, args.k)
    if args.format == "json":
        print(_json_dump({
            "sizes": list(args.sizes), "s": args.s, "k": args.k,
            "fixed": str(fixed) if fixed is not None else None,
            "method": args.method, "count": str(value),
        }))
    else:
        print(value)
    return 0


def _cmd_enumerate(args, parser: argparse.ArgumentParser) -> int:
    system = CircleSystem(args.sizes)
    if args.fixed is not None and args.fixed not in system:
        parser.error(f"--fixed {args.fixed} does not exist in system "
                     f"{list(args.sizes)}")
    stream = enumerate_gap(EnumerationRequest(
        system, SeparationParams(args.s, args.k), args.fixed))
    if args.limit is not None:
        stream = itertools.islice(stream, args.limit)
    if args.format == "json":
        print(_json_dump([[str(e) for e in sel] for sel in stream]))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        for sel in stream:
            writer.writerow([str(e) for e in sel])
    else:
        for sel in stream:
            print(sel)
    return 0


def _cmd_bijection(args, parser: argparse.ArgumentParser) -> int:
    system = CircleSystem(args.sizes)
    if system.num_circles != 2:
        parser.error("bijection requires exactly two circle sizes")
    if args.direction == "forward":
        try:
            selection = parse_selection(args.selection)
        except ValueError as exc:
            parser.error(str(exc))
        for e in selection:
            if e not in system:
                parser.error(f"element {e} does not exist in system "
                             f"{list(args.sizes)}")
        repaired, trace = zig(selection, system, args.s)
        out = format_flat_selection(flatten(e, system) for e in repaired)
    else:
        try:
            positions = parse_flat_selection(args.selection)
        except ValueError as exc:
            parser.error(str(exc))
        total = system.total
        for p in positions:
            if not 1 <= p <= total:
                parser.error(f"position {p} outside the combined circle 1..{total}")
        unflat = SelectionSet(tuple(unflatten(p, system) for p in positions))
        repaired, trace = zag(unflat, system, args.s)
        out = str(repaired)
    if args.format == "json":
        print(_json_dump({
            "direction": args.direction,
            "sizes": list(args.sizes), "s": args.s,
            "input": args.selection.strip(),
            "output": out,
            "trace": trace.as_dict() if args.trace else None,
        }))
    else:
        print(out)
        if args.trace:
            print(_json_dump(trace.as_dict()))
    return 0


def _cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    checks = tuple(CHECKS)
    if args.checks is not None:
        checks = tuple(tok.strip() for tok in args.checks.split(",") if tok.strip())
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            parser.error(f"unknown checks: {', '.join(unknown)}; "
                         f"available: {', '.join(CHECKS)}")
        if not checks:
            parser.error("--checks must name at least one check")
    grid = SweepGrid(max_size=args.max_size, max_k=args.max_k, max_s=args.max_s,
                     checks=checks, jobs=args.jobs)
    reports = verify_all(grid)
    if args.format == "json":
        sys.stdout.write(to_json_lines(reports))
    else:
        sys.stdout.write(render_table(reports))
    return 0 if overall_pass(reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "count": _cmd_count,
        "enumerate": _cmd_enumerate,
        "bijection": _cmd_bijection,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args, parser)
    except SystemExit as exc:  # parser.error inside a handler
        return int(exc.code or 0)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
