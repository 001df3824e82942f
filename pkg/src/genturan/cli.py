"""Command-line interface.

Subcommands: construct, count, free, pack, partition, search, enumerate,
verify.  Graph arguments accept either the expression syntax (K5, C7, K2,3,
T(9,3), 2*C5, join(K1,T(8,2)), del(K4,0), union/E forms) or a graph6
string; `-` reads graph6 lines from stdin.  Exit status: 0 on success /
all-pass, 1 on any check failure or negative freeness answer, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import sys

from . import constructions as cons
from .counting import count_copies, is_family_free
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .graphs import Graph, canonical_graph, enumerate_graphs
from .gspec import SpecError, parse_spec, parse_spec_list
from .packing import canonical_partition, max_disjoint_packing
from .search import (Objective, SearchProblem, brute_force_ex, merge,
                     result_line, shard)
from .verify import (FAIL, VerifyConfig, emit_report, registry_ids,
                     run_all, run_check)


class UsageError(ValueError):
    pass


def _read_graph(text: str) -> Graph:
    """Parse a graph argument: spec syntax first, then graph6, then stdin."""
    if text == "-":
        line = sys.stdin.readline().strip()
        if not line:
            raise UsageError("expected a graph6 line on stdin")
        return decode_graph6(line)
    try:
        return parse_spec(text).build()
    except SpecError as spec_err:
        try:
            return decode_graph6(text)
        except Graph6Error:
            raise UsageError(f"not a graph spec or graph6 string: {text!r} "
                             f"({spec_err})") from spec_err


def _read_family(text: str) -> list[Graph]:
    try:
        return [s.build() for s in parse_spec_list(text)]
    except SpecError as err:
        raise UsageError(str(err)) from err


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return int(a), int(b)
        v = int(text)
        return v, v
    except ValueError as err:
        raise UsageError(f"bad n-range {text!r}; expected a..b") from err


def _load_config(path: str | None) -> dict:
    """Plain key=value file; '#' starts a comment."""
    if not path:
        return {}
    out: dict[str, str] = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"bad config line {raw.rstrip()!r}")
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def _need(args, *names) -> list[int]:
    out = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"construction {args.name!r} needs --{name}")
        out.append(value)
    return out


def _cmd_construct(args) -> int:
    name = args.name
    if name == "universal-join":
        (k,) = _need(args, "k")
        if not args.f:
            raise UsageError("universal-join needs --f")
        g = cons.universal_join(k, _read_graph(args.f))
    elif name == "thm32":
        n, s, t, k = _need(args, "n", "s", "t", "k")
        g = cons.thm32_lower(n, s, t, k)
    elif name == "thm35":
        n, t, k = _need(args, "n", "t", "k")
        g = cons.thm35_lower(n, t, k)
    elif name == "thm62":
        n, k = _need(args, "n", "k")
        g = cons.thm62_lower(n, k)
    elif name == "prop54":
        n, s = _need(args, "n", "s")
        g = cons.prop54_lower(n, s)
    elif name == "prop61":
        (n,) = _need(args, "n")
        g = cons.prop61_host(n)
    elif name == "fstar":
        (k,) = _need(args, "k")
        if not args.f:
            raise UsageError("fstar needs --f")
        f = _read_graph(args.f)
        u = args.u if args.u is not None else cons.default_center_vertex(f)
        g = cons.f_star(f, u, k)
    else:
        raise UsageError(f"unknown construction {name!r}; known: universal-join, "
                         "thm32, thm35, thm62, prop54, prop61, fstar")
    print(encode_graph6(g))
    return 0


def _cmd_count(args) -> int:
    host = _read_graph(args.host)
    pattern = _read_graph(args.pattern)
    print(count_copies(host, pattern))
    return 0


def _cmd_free(args) -> int:
    host = _read_graph(args.host)
    family = _read_family(args.forbid)
    free = is_family_free(host, family)
    print("true" if free else "false")
    return 0 if free else 1


def _cmd_pack(args) -> int:
    host = _read_graph(args.host)
    pattern = _read_graph(args.pattern)
    packing = max_disjoint_packing(host, pattern)
    print(packing.size)
    for copy in packing.copies:
        print(" ".join(map(str, copy)))
    return 0


def _cmd_partition(args) -> int:
    host = _read_graph(args.host)
    pattern = _read_graph(args.pattern)
    part = canonical_partition(host, pattern)
    print("L:", " ".join(map(str, part.L)) if part.L else "-")
    print("R:", " ".join(map(str, part.R)) if part.R else "-")
    print("packing:", part.packing.size)
    for copy in part.packing.copies:
        print(" ".join(map(str, copy)))
    return 0


def _build_objective(args) -> Objective:
    kind = args.objective
    if kind == "edges":
        return Objective.edges()
    if kind == "copies":
        if not args.pattern:
            raise UsageError("objective 'copies' needs --pattern")
        return Objective.copies(_read_graph(args.pattern))
    if kind == "exstar":
        if args.k is None:
            raise UsageError("objective 'exstar' needs --k")
        return Objective.exstar(args.k)
    if kind == "exbar":
        if not args.pattern:
            raise UsageError("objective 'exbar' needs --pattern")
        return Objective.exbar(_read_graph(args.pattern))
    raise UsageError(f"unknown objective {kind!r}")


def _cmd_search(args) -> int:
    forbidden = tuple(_read_family(args.forbid)) if args.forbid else ()
    if not forbidden and args.objective != "copies":
        pass  # unconstrained maxima are legal, if rarely interesting
    problem = SearchProblem(args.n, forbidden, _build_objective(args))
    kwargs = dict(witness_cap=args.witness_cap,
                  budget_seconds=args.budget_seconds,
                  max_explored=args.max_explored,
                  n_cap=max(args.n, 10) if args.force else 10)
    if args.shards > 1:
        pieces = shard(problem, args.shards)
        result = merge([brute_force_ex(p, **kwargs) for p in pieces],
                       witness_cap=args.witness_cap)
    else:
        result = brute_force_ex(problem, **kwargs)
    print(result_line(problem, result))
    return 0


def _cmd_enumerate(args) -> int:
    forbidden = tuple(_read_family(args.forbid)) if args.forbid else ()
    prune = (lambda g: is_family_free(g, forbidden)) if forbidden else None
    count = 0
    for g in enumerate_graphs(args.n, prune):
        count += 1
        if not args.count_only:
            print(encode_graph6(canonical_graph(g) if args.canonical else g))
    if args.count_only:
        print(count)
    return 0


def _cmd_verify(args) -> int:
    file_cfg = _load_config(args.config)
    budget = args.budget_seconds
    if budget is None and "budget-seconds" in file_cfg:
        budget = float(file_cfg["budget-seconds"])
    max_explored = args.max_explored
    if max_explored is None and "max-explored" in file_cfg:
        max_explored = int(file_cfg["max-explored"])
    witness_cap = args.witness_cap
    if "witness-cap" in file_cfg and args.witness_cap == 16:
        witness_cap = int(file_cfg["witness-cap"])
    cfg = VerifyConfig(witness_cap=witness_cap, budget_seconds=budget,
                       max_explored=max_explored)
    n_range = _parse_range(args.n_range) if args.n_range else None
    params = dict(kv.split("=", 1) for kv in args.param)
    workers = args.workers
    if workers is None and "workers" in file_cfg:
        workers = int(file_cfg["workers"])
    if args.check == "all":
        if params:
            raise UsageError("--param applies to a single check, not 'all'")
        checks = run_all(cfg, n_range, workers=workers or 1)
    else:
        checks = [run_check(args.check, params or None, n_range, cfg)]
    table = emit_report(checks, args.csv)
    print(table, end="")
    failed = [r for c in checks for r in c.rows if r.verdict == FAIL]
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"[{status}] {check.check_id} "
              f"(n={check.n_range[0]}..{check.n_range[1]})")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="genturan",
        description="Exact generalized Turan numbers: counting, packing, "
                    "constructions, exhaustive search, claim verification.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a named construction as graph6")
    p.add_argument("name", help="universal-join | thm32 | thm35 | thm62 | "
                                "prop54 | prop61 | fstar")
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--f", help="pattern graph for universal-join / fstar")
    p.add_argument("--u", type=int, help="anchor vertex for fstar")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("count", help="count copies of a pattern in a host")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("free", help="test forbidden-subgraph freeness")
    p.add_argument("--host", required=True)
    p.add_argument("--forbid", required=True,
                   help="comma-separated forbidden graphs, e.g. K3,C4 or 2*C5")
    p.set_defaults(fn=_cmd_free)

    p = sub.add_parser("pack", help="maximum vertex-disjoint packing")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.set_defaults(fn=_cmd_pack)

    p = sub.add_parser("partition", help="packed/remainder vertex partition")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.set_defaults(fn=_cmd_partition)

    p = sub.add_parser("search", help="exhaustive extremal search")
    p.add_argument("objective", choices=["copies", "edges", "exstar", "exbar"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", default="")
    p.add_argument("--pattern")
    p.add_argument("--k", type=int)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--witness-cap", type=int, default=16)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--max-explored", type=int)
    p.add_argument("--force", action="store_true",
                   help="lift the default host-size cap of 10")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("enumerate", help="graphs up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", default="")
    p.add_argument("--canonical", action="store_true",
                   help="emit canonical representatives")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="run claim checks")
    p.add_argument("check", help="a check id or 'all'; ids: " + ", ".join(registry_ids()))
    p.add_argument("--n-range", metavar="A..B")
    p.add_argument("--csv", help="also write the CSV report here")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--witness-cap", type=int, default=16)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--max-explored", type=int)
    p.add_argument("--config", help="plain key=value config file")
    p.add_argument("--workers", type=int,
                   help="run checks in this many worker processes (default 1)")
    p.set_defaults(fn=_cmd_verify)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except (UsageError, SpecError, Graph6Error, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
