"""Command-line front end.

Digraphs travel between commands as digraph6 lines; reports are JSON
envelopes and ``table`` writes CSV.  Exit status: 0 success (including a
negative verdict), 2 invalid input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import asdict, dataclass, field

from . import __version__, _backend
from .constructions import ConstructionError, ConstructionSpec, Family, build
from .counting import (
    count_directed_cycles,
    count_directed_paths,
    cycle_count_upper_bound,
    min_out_degree_bound_check,
    triangle_upper_bound,
)
from .digraph import DigraphError
from .digraph6 import Digraph6Error, emit_digraph6, parse_digraph6
from .geodecity import geodetic_girth, is_k_geodetic
from .search import SearchBudget, SearchConstraints, extremal_search, table, verify_extremal_witness

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3

FAMILIES = {
    "permutation": Family.PERMUTATION,
    "bipartite": Family.ORIENTED_BIPARTITE,
    "triangle-expansion": Family.TRIANGLE_EXPANSION,
    "A": Family.FAMILY_A,
    "B": Family.FAMILY_B,
    "B-prime": Family.FAMILY_B_PRIME,
    "C": Family.FAMILY_C,
    "D": Family.FAMILY_D,
    "G": Family.G_CONSTRUCTION,
    "fixture": Family.FIXTURE,
}


class UsageError(Exception):
    """Bad input detected after argument parsing; maps to exit status 2."""


@dataclass
class RunConfig:
    command: str
    flags: dict = field(default_factory=dict)
    input: str | None = None
    output_format: str = "json"
    max_nodes: int = 10**8
    max_seconds: float = 300.0
    threads: int | None = None


@dataclass
class ResultEnvelope:
    tool: str
    version: str
    backend: str
    config: dict
    payload: object
    timing: dict | None

    def dumps(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0 or math.isinf(value):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geodex", description="k-geodetic digraph toolkit")
    p.add_argument("--version", action="version", version=f"geodex {__version__}")
    help_det = "omit wall-clock fields so identical runs give identical bytes"
    p.add_argument("--deterministic", action="store_true", help=help_det)
    # accepted after the subcommand too; SUPPRESS keeps it from resetting the top-level value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--deterministic", action="store_true", default=argparse.SUPPRESS, help=help_det)
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("--input", "-i", help="digraph6 file (default: standard input)")

    sp = sub.add_parser("check", parents=[common], help="test k-geodecity, with a witness on failure")
    sp.add_argument("--k", type=_positive_int, required=True)
    with_input(sp)

    sp = sub.add_parser("girth", parents=[common], help="geodetic girth")
    with_input(sp)

    sp = sub.add_parser("construct", parents=[common], help="emit a named construction")
    sp.add_argument("family", choices=sorted(FAMILIES))
    for name in ("d", "k", "a", "b", "t", "r", "n"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--name", help="fixture name")
    sp.add_argument("--rule-iii-to-first", action="store_true",
                    help="G family: send the rule iii arcs to u_{j,1}")
    sp.add_argument("--format", choices=("digraph6", "json"), default="digraph6")
    sp.add_argument("--labels", help="write the JSON label map to this file")

    sp = sub.add_parser("count", parents=[common], help="count directed cycles or paths")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--cycles", type=int, metavar="L")
    grp.add_argument("--paths", type=int, metavar="L")
    with_input(sp)

    def with_budget(sp):
        sp.add_argument("--max-nodes", type=_positive_int, default=10**8)
        sp.add_argument("--max-seconds", type=_positive_float, default=300.0)
        sp.add_argument("--threads", type=_positive_int, help="worker processes (default: GEODEX_THREADS or 1)")

    sp = sub.add_parser("search", parents=[common], help="exhaustive extremal search")
    sp.add_argument("--n", type=_positive_int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--strong", action="store_true")
    sp.add_argument("--no-sources-sinks", action="store_true")
    sp.add_argument("--min-size", type=int)
    sp.add_argument("--no-exclusion-prune", action="store_true")
    sp.add_argument("--no-degree-prune", action="store_true")
    sp.add_argument("--checkpoint", help="resumable progress file")
    sp.add_argument("--format", choices=("json", "digraph6"), default="json")
    with_budget(sp)

    sp = sub.add_parser("table", parents=[common], help="CSV grid of ex*(n;k) or ex(n;k)")
    sp.add_argument("--k", type=int, nargs="+", required=True)
    sp.add_argument("--n-from", type=_positive_int, required=True)
    sp.add_argument("--n-to", type=_positive_int, required=True)
    sp.add_argument("--strong", action=argparse.BooleanOptionalAction, default=True)
    sp.add_argument("--long", action="store_true", help="one row per cell with status and effort")
    with_budget(sp)

    sp = sub.add_parser("verify", parents=[common], help="check a claimed extremal witness")
    sp.add_argument("--n", type=_positive_int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--strong", action="store_true")
    sp.add_argument("--no-sources-sinks", action="store_true")
    with_input(sp)
    return p


def _read_digraphs(path: str | None, stdin) -> list:
    if path:
        try:
            with open(path, encoding="ascii") as fh:
                text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
    else:
        text = stdin.read()
    graphs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_digraph6(line.strip()))
        except (Digraph6Error, DigraphError) as exc:
            raise UsageError(f"line {lineno}: {exc}") from exc
    if not graphs:
        raise UsageError("no digraph6 input")
    return graphs


def _constraints(args) -> SearchConstraints:
    try:
        return SearchConstraints(args.n, args.k, require_strong=args.strong,
                                 forbid_sources_sinks=args.no_sources_sinks,
                                 min_size=getattr(args, "min_size", None))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _girth_value(g):
    v = geodetic_girth(g)
    return "infinite" if v == math.inf else v


def _cmd_check(args, stdin):
    graphs = _read_digraphs(args.input, stdin)
    return [is_k_geodetic(g, args.k).to_dict() for g in graphs], EXIT_OK


def _cmd_girth(args, stdin):
    graphs = _read_digraphs(args.input, stdin)
    return [{"n": g.n, "m": g.m, "geodetic_girth": _girth_value(g)} for g in graphs], EXIT_OK


def _cmd_count(args, stdin):
    graphs = _read_digraphs(args.input, stdin)
    out = []
    for g in graphs:
        if args.cycles is not None:
            if args.cycles < 2:
                raise UsageError("--cycles needs L >= 2")
            rep = count_directed_cycles(g, args.cycles).to_dict()
            k = args.cycles - 1
            bounds = {}
            if k >= 2 and g.n >= 1 and is_k_geodetic(g, k).is_k_geodetic:
                limit = cycle_count_upper_bound(g.n, k)
                bounds["k"] = k
                bounds["cycle_count_upper_bound"] = limit
                bounds["within_cycle_bound"] = rep["count"] <= limit
                bounds["per_arc_at_most_one"] = rep["per_arc_max"] <= 1
                bounds["min_out_degree_bound"] = min_out_degree_bound_check(g, k)
                if k == 2:
                    tri = triangle_upper_bound(g.n)
                    bounds["triangle_upper_bound"] = tri
                    bounds["within_triangle_bound"] = rep["count"] <= tri
            rep["bounds"] = bounds
        else:
            if args.paths < 1:
                raise UsageError("--paths needs L >= 1")
            rep = count_directed_paths(g, args.paths).to_dict()
        out.append(rep)
    return out, EXIT_OK


def _cmd_verify(args, stdin):
    c = _constraints(args)
    graphs = _read_digraphs(args.input, stdin)
    return [{"verified": verify_extremal_witness(g, c, args.size)} for g in graphs], EXIT_OK


def _budget(args) -> SearchBudget:
    return SearchBudget(args.max_nodes, args.max_seconds)


def _cmd_search(args, deterministic):
    c = _constraints(args)
    rec = extremal_search(c, _budget(args), threads=args.threads,
                          prune_exclusion=not args.no_exclusion_prune,
                          prune_degree=not args.no_degree_prune, checkpoint=args.checkpoint)
    payload = rec.to_dict()
    if deterministic:
        payload.pop("wall_time")
    return payload, (EXIT_OK if rec.complete else EXIT_BUDGET), rec


def _cmd_construct(args):
    params = {name: getattr(args, name) for name in ("d", "k", "a", "b", "t", "r", "n")
              if getattr(args, name) is not None}
    if args.name:
        params["name"] = args.name
    if args.rule_iii_to_first:
        params["rule_iii_to_first"] = True
    try:
        return build(ConstructionSpec(FAMILIES[args.family], params))
    except (ConstructionError, KeyError) as exc:
        raise UsageError(str(exc)) from exc


def _table_csv(records, ks, long: bool) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if long:
        w.writerow(["n", "k", "value", "class_count", "status", "upper_bound", "nodes"])
        for r in records:
            c = r.constraints
            w.writerow([c.n, c.k, "" if r.max_size is None else r.max_size,
                        r.class_count if r.complete else "", r.status,
                        "" if r.upper_bound is None else r.upper_bound, r.nodes_explored])
        return buf.getvalue()
    cells = {(r.constraints.n, r.constraints.k): r for r in records}
    ns = sorted({n for n, _ in cells})
    w.writerow(["n"] + [str(k) for k in ks])
    for n in ns:
        row = [n]
        for k in ks:
            r = cells.get((n, k))
            row.append("" if r is None or not r.complete or r.max_size is None else r.max_size)
        w.writerow(row)
    return buf.getvalue()


def _config(args) -> RunConfig:
    raw = dict(sorted(vars(args).items()))
    return RunConfig(
        command=raw.pop("command"),
        input=raw.pop("input", None),
        output_format=raw.pop("format", "csv" if args.command == "table" else "json"),
        max_nodes=raw.pop("max_nodes", 10**8),
        max_seconds=raw.pop("max_seconds", 300.0),
        threads=raw.pop("threads", None),
        flags=raw,
    )


def run(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    t0 = time.perf_counter()

    def envelope(payload) -> str:
        timing = None if args.deterministic else {"seconds": round(time.perf_counter() - t0, 6)}
        return ResultEnvelope("geodex", __version__, _backend.BACKEND, asdict(_config(args)),
                              payload, timing).dumps()

    try:
        if args.command == "construct":
            ld = _cmd_construct(args)
            line = emit_digraph6(ld.digraph)
            labels = {str(v): lab for v, lab in ld.label_map().items()}
            if args.labels:
                with open(args.labels, "w", encoding="utf-8") as fh:
                    json.dump(labels, fh, sort_keys=True)
            for msg in ld.warnings:
                print(f"warning: {msg}", file=stderr)
            if args.format == "json":
                print(envelope({"digraph6": line, "n": ld.digraph.n, "m": ld.digraph.m,
                                "labels": labels, "warnings": list(ld.warnings)}), file=stdout)
            else:
                print(line, file=stdout)
            return EXIT_OK
        if args.command == "table":
            if args.n_from > args.n_to:
                raise UsageError("--n-from must not exceed --n-to")
            if any(k < 2 for k in args.k):
                raise UsageError("every --k must be at least 2")
            records = table(args.k, args.n_from, args.n_to, strong=args.strong,
                            budget=_budget(args), threads=args.threads)
            stdout.write(_table_csv(records, args.k, args.long))
            partial = [r for r in records if not r.complete]
            for r in partial:
                print(f"cell n={r.constraints.n} k={r.constraints.k}: {r.status}", file=stderr)
            return EXIT_BUDGET if partial else EXIT_OK
        if args.command == "search":
            payload, code, rec = _cmd_search(args, args.deterministic)
            if args.format == "digraph6":
                for g in rec.representatives:
                    print(emit_digraph6(g), file=stdout)
            else:
                print(envelope(payload), file=stdout)
            if code == EXIT_BUDGET:
                print(f"search incomplete: {rec.status}", file=stderr)
            return code
        handler = {"check": _cmd_check, "girth": _cmd_girth, "count": _cmd_count,
                   "verify": _cmd_verify}[args.command]
        payload, code = handler(args, stdin)
        print(envelope(payload), file=stdout)
        return code
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
