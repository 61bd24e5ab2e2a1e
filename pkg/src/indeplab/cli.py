"""Command-line front end: analyze graphs, run theorem checks, scan corpora,
generate graphs.

Exit codes: 0 success, 1 theorem failure, 2 usage or parse error,
3 resource cap exceeded.  JSON goes to stdout with sorted keys so repeated
runs are byte-identical; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Optional

from . import exact, fast, theorems
from .decomposition import gallai_edmonds, larson
from .errors import (CapExceededError, GraphInputError, HostMismatchError,
                     IndepLabError, PartitionError)
from .graph import (Graph, build_graph, complete, complete_bipartite, cycle,
                    empty_graph, enumerate_labeled_graphs, figure1, gnp,
                    gnp_stream, path, star)
from .graph6 import encode_graph6, parse_graph6
from .matching import matching_number

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_GENERATORS = {
    "figure1": (0, lambda: figure1()),
    "path": (1, lambda n: path(n)),
    "cycle": (1, lambda n: cycle(n)),
    "complete": (1, lambda n: complete(n)),
    "complete_bipartite": (2, lambda a, b: complete_bipartite(a, b)),
    "star": (1, lambda k: star(k)),
    "empty": (1, lambda n: empty_graph(n)),
}


def _graph_from_gen(spec: str) -> Graph:
    name, _, argstr = spec.partition(":")
    if name == "gnp":
        parts = argstr.split(",")
        if len(parts) != 3:
            raise GraphInputError(f"gnp spec needs n,p,seed: {spec!r}")
        return gnp(int(parts[0]), float(parts[1]), int(parts[2]))
    if name not in _GENERATORS:
        raise GraphInputError(
            f"unknown generator {name!r}; known: "
            f"{', '.join(sorted(_GENERATORS))}, gnp")
    arity, fn = _GENERATORS[name]
    args = [int(a) for a in argstr.split(",") if a] if argstr else []
    if len(args) != arity:
        raise GraphInputError(
            f"generator {name!r} takes {arity} argument(s), got {len(args)}")
    return fn(*args)


def _parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphInputError("edge list needs an 'n m' header")
    try:
        n, m = int(tokens[0]), int(tokens[1])
        pairs = [int(t) for t in tokens[2:]]
    except ValueError as exc:
        raise GraphInputError(f"bad integer in edge list: {exc}") from None
    if len(pairs) != 2 * m:
        raise GraphInputError(
            f"edge list header promises {m} edges, found {len(pairs) // 2}")
    return build_graph(n, list(zip(pairs[::2], pairs[1::2])))


def _read_single_graph(args) -> tuple[Graph, str]:
    """Resolve the one input graph; returns (graph, graph6 line)."""
    if args.gen:
        G = _graph_from_gen(args.gen)
        return G, encode_graph6(G)
    if args.g6:
        G = parse_graph6(args.g6)
        return G, args.g6.strip()
    text = sys.stdin.read() if args.input in (None, "-") else \
        open(args.input, "r", encoding="ascii").read()
    fmt = args.format
    if fmt == "auto":
        head = text.split()
        fmt = "edges" if len(head) >= 2 and head[0].isdigit() and \
            head[1].isdigit() else "graph6"
    if fmt == "edges":
        G = _parse_edge_list(text)
        return G, encode_graph6(G)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphInputError(
            f"expected exactly one graph6 line, found {len(lines)}")
    G = parse_graph6(lines[0])
    return G, lines[0].strip()


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gen", help="named generator, e.g. figure1, cycle:5, "
                   "complete_bipartite:2,3, gnp:8,0.5,42")
    p.add_argument("--g6", help="graph6 line given inline")
    p.add_argument("--in", dest="input", metavar="FILE",
                   help="read the graph from FILE ('-' for stdin, default)")
    p.add_argument("--format", choices=["auto", "graph6", "edges"],
                   default="auto", help="input file format (default: auto)")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _set(members) -> list[int]:
    return sorted(members)


# ---------------------------------------------------------------------------
# analyze


def _build_report(G: Graph, g6: str, tier: str, fast_only: bool) -> dict:
    tiers: dict[str, str] = {}
    rep: dict = {"graph6": g6, "n": G.n, "m": G.m}
    oracle_ok = not fast_only and G.n <= exact.oracle_cap()
    if not fast_only and not oracle_ok:
        raise CapExceededError("analyze (oracle tier)", G.n,
                               exact.oracle_cap())
    use_fast = tier == "fast" or fast_only

    mu = matching_number(G)
    rep["mu"] = mu
    tiers["mu"] = "fast"

    if use_fast:
        rep["d"] = fast.critical_difference_fast(G)
        tiers["d"] = "fast"
    else:
        rep["d"] = exact.critical_profile(G).d
        tiers["d"] = "oracle"

    parts = larson(G, prefer="fast" if use_fast else
                   ("oracle" if oracle_ok else "auto"))
    rep["larson"] = {
        "J": _set(parts.J), "L": _set(parts.L), "Lc": _set(parts.Lc),
        "boundary": _set(parts.boundary),
    }
    tiers["larson"] = "fast" if use_fast else "oracle"

    ge = gallai_edmonds(G)
    rep["gallai_edmonds"] = {"D": _set(ge.D), "A": _set(ge.A), "C": _set(ge.C)}
    tiers["gallai_edmonds"] = "fast"

    if use_fast:
        rep["is_KE"] = len(parts.Lc) == 0
        tiers["is_KE"] = "fast"
        rep["is_2bicritical"] = len(parts.L) == 0 if G.n >= 1 else None
        tiers["is_2bicritical"] = "fast"
    else:
        rep["is_KE"] = exact.alpha(G) + mu == G.n
        tiers["is_KE"] = "oracle"
        rep["is_2bicritical"] = (exact.is_2_bicritical_oracle(G)
                                 if G.n >= 1 else None)
        tiers["is_2bicritical"] = "oracle"

    if oracle_ok:
        profile = exact.critical_profile(G)
        rep["alpha"] = exact.alpha(G)
        rep["core"] = _set(exact.core(G))
        rep["corona"] = _set(exact.corona(G))
        rep["ker"] = _set(profile.crit_family.intersection())
        rep["nucleus"] = _set(profile.mcrit_family.intersection())
        rep["diadem"] = _set(profile.crit_family.union())
        for key in ("alpha", "core", "corona", "ker", "nucleus", "diadem"):
            tiers[key] = "oracle"
    else:
        for key in ("alpha", "core", "corona", "ker", "nucleus", "diadem"):
            rep[key] = None
            tiers[key] = "unavailable"

    rep["tiers"] = tiers
    return rep


def _cmd_analyze(args) -> int:
    G, g6 = _read_single_graph(args)
    tier = "fast" if args.fast else ("oracle" if args.oracle else "auto")
    report = _build_report(G, g6, tier, args.fast_only)
    _emit(report)
    return EXIT_OK


# ---------------------------------------------------------------------------
# check


def _selected_ids(args) -> Optional[list[str]]:
    if args.all or not args.theorem:
        return None
    for tid in args.theorem:
        if tid not in theorems.CHECKS:
            raise KeyError(tid)
    return args.theorem


def _cmd_check(args) -> int:
    G, g6 = _read_single_graph(args)
    try:
        ids = _selected_ids(args)
    except KeyError as exc:
        sys.stderr.write(
            f"unknown theorem id {exc.args[0]!r}; valid ids: "
            f"{', '.join(theorems.CHECK_IDS)}\n")
        return EXIT_USAGE
    verdicts = theorems.evaluate(G, ids, detail=True, g6=g6)
    _emit({"graph6": g6, "verdicts": [v.to_dict() for v in verdicts]})
    return EXIT_FAILURE if any(v.failed for v in verdicts) else EXIT_OK


# ---------------------------------------------------------------------------
# scan


def _scan_lines(args) -> Iterable[str]:
    if args.exhaustive is not None:
        return (encode_graph6(G)
                for G in enumerate_labeled_graphs(args.exhaustive))
    if args.corpus is not None:
        def from_file():
            stream = sys.stdin if args.corpus == "-" else \
                open(args.corpus, "r", encoding="ascii")
            for line in stream:
                line = line.strip()
                if line:
                    yield line
        return from_file()
    n, p, count, seed = args.random
    return (encode_graph6(G)
            for G in gnp_stream(int(n), float(p), int(count), int(seed)))


def _cmd_scan(args) -> int:
    try:
        ids = _selected_ids(args)
    except KeyError as exc:
        sys.stderr.write(
            f"unknown theorem id {exc.args[0]!r}; valid ids: "
            f"{', '.join(theorems.CHECK_IDS)}\n")
        return EXIT_USAGE
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    outcome = theorems.scan_graph6(
        _scan_lines(args), ids, jobs=jobs,
        on_failure=lambda payload: _emit(payload))
    sys.stdout.write(
        f"graphs={outcome.graphs} failures={outcome.failures} "
        f"not_applicable={outcome.not_applicable}\n")
    return EXIT_FAILURE if outcome.failures else EXIT_OK


# ---------------------------------------------------------------------------
# generate


def _cmd_generate(args) -> int:
    if args.gen is None and args.random is None:
        sys.stderr.write("generate needs --gen or --random\n")
        return EXIT_USAGE
    if args.gen is not None:
        lines = [encode_graph6(_graph_from_gen(args.gen))]
    else:
        n, p, count, seed = args.random
        lines = [encode_graph6(G)
                 for G in gnp_stream(int(n), float(p), int(count), int(seed))]
    out = sys.stdout if args.out in (None, "-") else \
        open(args.out, "w", encoding="ascii")
    for line in lines:
        out.write(line + "\n")
    if out is not sys.stdout:
        out.close()
    return EXIT_OK


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indeplab",
        description="Independence/criticality invariants and theorem checks "
                    "for simple graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for one graph")
    _add_input_options(p)
    tier = p.add_mutually_exclusive_group()
    tier.add_argument("--oracle", action="store_true",
                      help="force the enumeration tier for dual-route fields")
    tier.add_argument("--fast", action="store_true",
                      help="force the matching tier for dual-route fields")
    p.add_argument("--fast-only", action="store_true",
                   help="skip enumeration-tier fields entirely (large graphs)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("check", help="run theorem checks on one graph")
    _add_input_options(p)
    p.add_argument("--theorem", action="append", metavar="ID",
                   help="check id (repeatable); see --list-theorems")
    p.add_argument("--all", action="store_true", help="run every check")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("scan", help="run checks across a corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", type=int, metavar="N",
                     help="all labeled graphs on N vertices (N <= 7)")
    src.add_argument("--corpus", metavar="FILE",
                     help="graph6 file, one graph per line ('-' for stdin)")
    src.add_argument("--random", nargs=4, metavar=("N", "P", "COUNT", "SEED"),
                     help="COUNT samples of G(N, P)")
    p.add_argument("--theorem", action="append", metavar="ID")
    p.add_argument("--all", action="store_true", help="run every check")
    p.add_argument("--jobs", type=int, default=0,
                   help="parallel workers (default: all cores)")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("generate", help="emit graph6 lines")
    p.add_argument("--gen", help="named generator spec")
    p.add_argument("--random", nargs=4, metavar=("N", "P", "COUNT", "SEED"))
    p.add_argument("--out", metavar="FILE", help="output file (default stdout)")
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphInputError, PartitionError, HostMismatchError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CapExceededError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_CAP
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except IndepLabError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        raise


if __name__ == "__main__":
    sys.exit(main())
