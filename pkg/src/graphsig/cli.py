"""Command-line front end.

Exit codes: 0 success, 1 reserved for "a verification check failed on some
graph" (counterexample found), 2 for operational errors (bad arguments,
malformed input in strict mode).  Table output is human-oriented and
unstable; JSON-lines is the stable machine interface.
"""

from __future__ import annotations

import argparse
import gzip
import json
import re
import sys
from typing import Iterable, Iterator, Optional

from .cycles import DEFAULT_BUDGET, census
from .families import (free_trees, ingest_graph6, sun_grid,
                       unicyclic_from_trees, bicyclic_from_unicyclic)
from .graphs import Graph6ParseError, cycle_graph, to_graph6
from .harness import (ALL_CHECK_IDS, RunSummary, run_checks)
from .inertia import inertia
from .transforms import (SunSpec, line_graph, power, reduce_fully,
                         subdivision, sun, total_graph)


class CliError(Exception):
    """Operational error: reported on stderr, exits with status 2."""


def _open_lines(path: str) -> Iterator[str]:
    if path.endswith(".gz"):
        with gzip.open(path, "rt", encoding="utf-8") as fh:
            yield from fh
    else:
        with open(path, "r", encoding="utf-8") as fh:
            yield from fh


def _input_lines(args) -> Iterator[str]:
    if getattr(args, "stdin", False):
        yield from sys.stdin
    elif getattr(args, "input", None):
        yield from _open_lines(args.input)
    else:
        raise CliError("no input source; use --input PATH or --stdin")


def _emit(obj: dict):
    print(json.dumps(obj, sort_keys=True))


def _stream_graphs(args) -> Iterator:
    strict = getattr(args, "strict", False)
    for item in ingest_graph6(_input_lines(args), strict=strict):
        yield item


# -- plain per-graph commands ----------------------------------------------


def cmd_inertia(args) -> int:
    as_table = args.format == "table"
    if as_table:
        print(f"{'graph6':<20} {'n':>3} {'m':>3} {'p':>3} {'neg':>3} "
              f"{'eta':>3} {'r':>3} {'s':>3}")
    for item in _stream_graphs(args):
        if not item.ok:
            if as_table:
                print(f"line {item.line_no}: {item.error}", file=sys.stderr)
            else:
                _emit({"type": "error", "line": item.line_no,
                       "message": item.error})
            continue
        g = item.graph
        inert = inertia(g)
        if as_table:
            print(f"{item.text:<20} {g.n:>3} {g.edge_count:>3} {inert.p:>3} "
                  f"{inert.n:>3} {inert.eta:>3} {inert.r:>3} {inert.s:>3}")
        else:
            _emit({"type": "inertia", "graph6": item.text, "order": g.n,
                   "edges": g.edge_count, "p": inert.p, "n": inert.n,
                   "eta": inert.eta, "r": inert.r, "s": inert.s})
    return 0


def cmd_census(args) -> int:
    as_table = args.format == "table"
    for item in _stream_graphs(args):
        if not item.ok:
            if as_table:
                print(f"line {item.line_no}: {item.error}", file=sys.stderr)
            else:
                _emit({"type": "error", "line": item.line_no,
                       "message": item.error})
            continue
        result = census(item.graph, budget=args.budget)
        hist = {str(k): v for k, v in sorted(result.by_length.items())}
        if as_table:
            compact = ",".join(f"{k}:{v}" for k, v in hist.items()) or "-"
            flag = " budget-exceeded" if result.budget_exceeded else ""
            print(f"{item.text:<20} c3={result.c3} c5={result.c5} "
                  f"c1={result.c1} total={result.total} [{compact}]{flag}")
        else:
            _emit({"type": "census", "graph6": item.text, "byLength": hist,
                   "c3": result.c3, "c5": result.c5, "c1": result.c1,
                   "total": result.total,
                   "budgetExceeded": result.budget_exceeded})
    return 0


_SUN_RE = re.compile(r"^sun:(\d+),\[([\d,\s]*)\]$")


def _parse_transform(which: str):
    if which == "line":
        return lambda g: line_graph(g)
    if which == "subdivide":
        return lambda g: subdivision(g)
    if which == "total":
        return lambda g: total_graph(g)
    if which.startswith("power:"):
        try:
            k = int(which.split(":", 1)[1])
        except ValueError:
            raise CliError(f"bad power exponent in {which!r}")
        if k < 1:
            raise CliError("power exponent must be >= 1")
        return lambda g: power(g, k)
    raise CliError(f"unknown transform {which!r}")


def cmd_transform(args) -> int:
    which = args.which
    m = _SUN_RE.match(which)
    if m:
        t = int(m.group(1))
        pendants = tuple(int(x) for x in m.group(2).split(",")) if m.group(2).strip() else ()
        try:
            spec = SunSpec(t, pendants)
        except ValueError as exc:
            raise CliError(str(exc))
        print(to_graph6(sun(spec)))
        return 0
    fn = _parse_transform(which)
    for item in _stream_graphs(args):
        if not item.ok:
            print(f"line {item.line_no}: {item.error}", file=sys.stderr)
            continue
        out = fn(item.graph)
        if args.format == "jsonl":
            labels = list(map(repr, out.labels)) if out.labels else None
            _emit({"type": "transform", "which": which, "input": item.text,
                   "output": to_graph6(out), "labels": labels})
        else:
            print(to_graph6(out))
    return 0


def cmd_reduce(args) -> int:
    as_table = args.format == "table"
    for item in _stream_graphs(args):
        if not item.ok:
            print(f"line {item.line_no}: {item.error}", file=sys.stderr)
            continue
        reduced, steps = reduce_fully(item.graph)
        if as_table:
            print(f"{item.text:<20} -> {to_graph6(reduced):<20} steps={steps}")
        else:
            _emit({"type": "reduce", "input": item.text,
                   "output": to_graph6(reduced), "steps": steps})
    return 0


# -- verification ------------------------------------------------------------


_RANGE_RE = re.compile(r"^(\d+)(?:\.\.(\d+))?$")
_SUNS_RE = re.compile(r"^t=(\d+)(?:\.\.(\d+))?,cap=(\d+)$")


def _parse_range(text: str) -> tuple[int, int]:
    m = _RANGE_RE.match(text)
    if not m:
        raise CliError(f"bad range {text!r}; expected A or A..B")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise CliError(f"empty range {text!r}")
    return lo, hi


def family_items(spec: str) -> Iterator[tuple]:
    """Yield (subject, family-tag) pairs for a family spec such as
    trees:2..10, unicyclic:3..9, bicyclic:4..9, cycles:8..20, or
    suns:t=3..8,cap=2."""
    kind, _, rest = spec.partition(":")
    if kind == "suns":
        m = _SUNS_RE.match(rest)
        if not m:
            raise CliError(f"bad sun family {spec!r}; "
                              "expected suns:t=A..B,cap=C")
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) else lo
        cap = int(m.group(3))
        for sp in sun_grid(hi, cap, t_min=lo):
            yield sp, f"suns(t={sp.t},cap={cap})"
        return
    lo, hi = _parse_range(rest)
    if kind == "trees":
        for n in range(lo, hi + 1):
            for g in free_trees(n):
                yield g, f"trees(n={n})"
    elif kind == "unicyclic":
        for n in range(lo, hi + 1):
            for g in unicyclic_from_trees(n):
                yield g, f"unicyclic(n={n})"
    elif kind == "bicyclic":
        for n in range(lo, hi + 1):
            for g in bicyclic_from_unicyclic(n):
                yield g, f"bicyclic(n={n})"
    elif kind == "cycles":
        for n in range(max(3, lo), hi + 1):
            yield cycle_graph(n), f"cycles(n={n})"
    else:
        raise CliError(f"unknown family kind {kind!r}")


def _verify_items(args) -> Iterator[tuple]:
    if args.family:
        yield from family_items(args.family)
        return
    for item in _stream_graphs(args):
        if not item.ok:
            _emit({"type": "error", "line": item.line_no,
                   "message": item.error})
            continue
        yield item.graph, f"stdin:line={item.line_no}" if args.stdin \
            else f"{args.input}:line={item.line_no}"


def cmd_verify(args) -> int:
    check_id = args.check_id
    if check_id not in ALL_CHECK_IDS:
        raise CliError(f"unknown check id {check_id!r}; "
                          f"known: {', '.join(ALL_CHECK_IDS)}")
    summary = RunSummary(check_id=check_id)
    params = {}
    if check_id in ("lemma-4.1", "thm-4.2"):
        params["k"] = args.power_k
    if check_id == "lemma-3.1":
        items: Iterable[tuple] = [(None, "fixed")]
    else:
        items = _verify_items(args)
    consumed = 0

    def counted():
        nonlocal consumed
        for it in items:
            consumed += 1
            yield it

    for rep in run_checks(counted(), check_id, budget=args.budget,
                          jobs=args.jobs, params=params):
        summary.add(rep)
        if args.format == "table":
            print(f"{rep.verdict:<8} {rep.check_id:<16} {rep.graph6:<24} "
                  f"{rep.family}")
        else:
            _emit(rep.to_json_dict())
    summary.graphs = consumed
    if args.format == "table":
        print(f"summary: graphs={summary.graphs} pass={summary.passed} "
              f"fail={summary.failed} vacuous={summary.vacuous} "
              f"skipped={summary.skipped}")
    else:
        _emit(summary.to_json_dict())
    return 1 if summary.failed else 0


# -- argument plumbing --------------------------------------------------------


def _add_io_flags(p: argparse.ArgumentParser, with_family: bool = False):
    p.add_argument("--input", metavar="PATH",
                   help="read graph6 lines from PATH (.gz supported)")
    p.add_argument("--stdin", action="store_true",
                   help="read graph6 lines from standard input")
    if with_family:
        p.add_argument("--family", metavar="SPEC",
                       help="generate inputs: trees:2..10, unicyclic:3..9, "
                            "bicyclic:4..9, cycles:8..20, suns:t=3..8,cap=2")
    p.add_argument("--format", choices=("table", "jsonl"), default=None)
    p.add_argument("--strict", action="store_true",
                   help="abort with status 2 on the first malformed line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphsig",
        description="Exact signature, inertia and cycle-census toolkit "
                    "for small graphs, with a verification harness.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inertia", help="exact inertia and signature per graph")
    _add_io_flags(p)

    p = sub.add_parser("census", help="simple-cycle counts by length")
    _add_io_flags(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="maximum number of cycles to record")

    p = sub.add_parser("transform",
                       help="emit derived graphs as graph6")
    p.add_argument("which",
                   help="line | power:K | subdivide | total | sun:T,[a,b,...]")
    _add_io_flags(p)

    p = sub.add_parser("reduce",
                       help="contract degree-2 four-vertex paths to fixpoint")
    _add_io_flags(p)

    p = sub.add_parser("verify", help="run a named check over a graph stream")
    p.add_argument("check_id", metavar="CHECK",
                   help=f"one of: {', '.join(ALL_CHECK_IDS)}")
    _add_io_flags(p, with_family=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes (reports stay in stream order)")
    p.add_argument("--power-k", type=int, default=2,
                   help="exponent for the power-graph checks")
    return parser


_COMMANDS = {
    "inertia": cmd_inertia,
    "census": cmd_census,
    "transform": cmd_transform,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "jsonl" if args.command == "verify" else "table"
    if getattr(args, "budget", 1) < 0:
        print("budget must be >= 0", file=sys.stderr)
        return 2
    sources = sum(1 for flag in ("input", "stdin", "family")
                  if getattr(args, flag, None))
    if sources > 1:
        print("choose exactly one input source "
              "(--input, --stdin or --family)", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except Graph6ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
