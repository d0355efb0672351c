"""Batch command-line interface.

Exit codes: 0 decided/constructed/verified-true, 2 verified-false or
nonexistent, 3 search budget exceeded, 1 usage or input errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .catalog import se_gap_graph
from .cdcflow import (
    cdc_to_se,
    enumerate_even_cdcs,
    find_nzf,
    ocdc_to_se_bipartite,
    se_to_cdc,
    se_to_ocdc_bipartite,
    verify_cdc,
    verify_nzf,
    verify_ocdc,
    with_singleton_classes,
)
from .coloring import (
    chromatic_index,
    counterexample_filter,
    decide_mu_se,
    se_chromatic_number,
    verify_simultaneous,
)
from .constructions import (
    color_cartesian_regular,
    color_cartesian_sum,
    color_complete,
    color_complete_bipartite,
    color_from_hamiltonian,
    color_join,
    color_lexicographic,
    color_wheel,
    subdivide_coloring,
)
from .errors import (
    LimitExceeded,
    NoOcdcFound,
    ParseError,
    PreconditionViolated,
    SearchBudgetExceeded,
    SimedgeError,
)
from .graph import DegreeSequence, Graph, edge_connectivity
from .realization import realize_connected
from .trades import coloring_to_trade, spectrum_scan, trade_to_graph, verify_trade

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FALSE = 2
EXIT_BUDGET = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str) -> Graph:
    return formats.parse_graph(_read(path))


def _load_coloring(path: str):
    obj = formats.loads(_read(path))
    if obj["kind"] != "coloring":
        raise ParseError(f"expected a coloring, got {obj['kind']}")
    return formats.coloring_from_obj(obj)


def _emit_coloring(sc) -> int:
    sys.stdout.write(formats.dumps(formats.coloring_to_obj(sc)))
    return EXIT_OK


def cmd_verify(args) -> int:
    obj = formats.loads(_read(args.file))
    kind = obj["kind"]
    if kind == "coloring":
        sc = formats.coloring_from_obj(obj)
        res = verify_simultaneous(sc)
    elif kind == "trade":
        res = verify_trade(formats.trade_from_obj(obj))
    elif kind == "cdc":
        cover = formats.cdc_from_obj(obj)
        res = verify_cdc(cover.graph, cover)
    elif kind == "ocdc":
        cover = formats.ocdc_from_obj(obj)
        res = verify_ocdc(cover.graph, cover)
    elif kind == "flow":
        flow, k = formats.flow_from_obj(obj)
        res = verify_nzf(flow.graph, flow, k)
    else:
        raise ParseError(f"unknown object kind {kind!r}")
    print(f"{kind}: {'valid' if res else 'INVALID: ' + res.reason}")
    return EXIT_OK if res else EXIT_FALSE


def cmd_solve(args) -> int:
    G = _load_graph(args.graph)
    if args.chromatic_index:
        print(chromatic_index(G, budget=args.budget))
        return EXIT_OK
    if args.colors is not None:
        sc = decide_mu_se(G, args.mu, args.colors, budget=args.budget)
        if sc is None:
            print(
                f"no {args.mu}-simultaneous coloring with {args.colors} colors",
                file=sys.stderr,
            )
            return EXIT_FALSE
        return _emit_coloring(sc)
    l_max = args.max_colors if args.max_colors is not None else len(G.edges)
    best = se_chromatic_number(G, args.mu, l_max, budget=args.budget)
    if best is None:
        print(f"none up to {l_max} colors", file=sys.stderr)
        return EXIT_FALSE
    print(best)
    return EXIT_OK


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "wheel":
        _, sc = color_wheel(int(args.params[0]))
        return _emit_coloring(sc)
    if fam == "complete":
        n, mu = int(args.params[0]), int(args.params[1])
        out = color_complete(n, mu, budget=args.budget)
        if out is None:
            print(f"K_{n} has no {mu}-simultaneous coloring", file=sys.stderr)
            return EXIT_FALSE
        return _emit_coloring(out[1])
    if fam == "complete-bipartite":
        n, m, mu = (int(x) for x in args.params[:3])
        return _emit_coloring(color_complete_bipartite(n, m, mu))
    if fam == "join":
        sc1 = _load_coloring(args.params[0])
        sc2 = _load_coloring(args.params[1])
        _, sc = color_join(sc1.graph, sc1, sc2.graph, sc2)
        return _emit_coloring(sc)
    if fam == "cartesian":
        sc1 = _load_coloring(args.params[0])
        sc2 = _load_coloring(args.params[1])
        _, sc = color_cartesian_sum(sc1.graph, sc1, sc2.graph, sc2)
        return _emit_coloring(sc)
    if fam == "cartesian-regular":
        G = _load_graph(args.params[0])
        H = _load_graph(args.params[1])
        mu = int(args.params[2])
        _, sc = color_cartesian_regular(G, H, mu, budget=args.budget)
        return _emit_coloring(sc)
    if fam == "lex":
        G = _load_graph(args.params[0])
        scH = _load_coloring(args.params[1])
        _, sc = color_lexicographic(G, scH.graph, scH, budget=args.budget)
        return _emit_coloring(sc)
    if fam == "subdivide":
        sc = _load_coloring(args.params[0])
        u, v, k = (int(x) for x in args.params[1:4])
        _, out = subdivide_coloring(sc.graph, sc, (u, v), k)
        return _emit_coloring(out)
    if fam == "hamiltonian":
        G = _load_graph(args.params[0])
        circuit = [int(x) for x in args.params[1:]]
        return _emit_coloring(color_from_hamiltonian(G, circuit, budget=args.budget))
    raise ParseError(f"unknown family {fam!r}")


def cmd_trade(args) -> int:
    if args.action == "to-graph":
        T = formats.trade_from_obj(formats.loads(_read(args.file)))
        _, sc = trade_to_graph(T, symmetric=args.symmetric)
        return _emit_coloring(sc)
    if args.action == "from-graph":
        sc = _load_coloring(args.file)
        T = coloring_to_trade(sc.graph, sc, symmetric=args.symmetric)
        sys.stdout.write(formats.dumps(formats.trade_to_obj(T)))
        return EXIT_OK
    if args.action == "verify":
        T = formats.trade_from_obj(formats.loads(_read(args.file)))
        res = verify_trade(T)
        print("valid" if res else f"INVALID: {res.reason}")
        return EXIT_OK if res else EXIT_FALSE
    if args.action == "spectrum":
        feasible = spectrum_scan(args.mu, args.max_volume, budget=args.budget)
        print(" ".join(str(s) for s in sorted(feasible)))
        return EXIT_OK
    raise ParseError(f"unknown trade action {args.action!r}")


def cmd_cdc(args) -> int:
    if args.action == "verify":
        cover = formats.cdc_from_obj(formats.loads(_read(args.file)))
        res = verify_cdc(cover.graph, cover)
        print("valid" if res else f"INVALID: {res.reason}")
        return EXIT_OK if res else EXIT_FALSE
    if args.action == "from-se":
        sc = _load_coloring(args.file)
        cover = se_to_cdc(sc.graph, sc)
        sys.stdout.write(formats.dumps(formats.cdc_to_obj(cover)))
        return EXIT_OK
    if args.action == "to-se":
        cover = formats.cdc_from_obj(formats.loads(_read(args.file)))
        if cover.classes is None:
            cover = with_singleton_classes(cover)
        sc = cdc_to_se(cover.graph, cover, budget=args.budget)
        if sc is None:
            print("no coloring: parity system unsatisfiable", file=sys.stderr)
            return EXIT_FALSE
        return _emit_coloring(sc)
    if args.action == "enumerate-even":
        G = _load_graph(args.file)
        covers = enumerate_even_cdcs(
            G,
            limit=args.limit,
            up_to_automorphism=args.up_to_automorphism,
            budget=args.budget,
        )
        for cover in covers:
            sys.stdout.write(formats.dumps(formats.cdc_to_obj(cover)))
        print(f"{len(covers)} covers", file=sys.stderr)
        return EXIT_OK if covers else EXIT_FALSE
    if args.action == "se-to-ocdc":
        sc = _load_coloring(args.file)
        cover = se_to_ocdc_bipartite(sc.graph, sc)
        sys.stdout.write(formats.dumps(formats.ocdc_to_obj(cover)))
        return EXIT_OK
    if args.action == "ocdc-to-se":
        cover = formats.ocdc_from_obj(formats.loads(_read(args.file)))
        return _emit_coloring(ocdc_to_se_bipartite(cover.graph, cover))
    raise ParseError(f"unknown cdc action {args.action!r}")


def cmd_nzf(args) -> int:
    if args.action == "find":
        G = _load_graph(args.file)
        flow = find_nzf(G, args.k, budget=args.budget)
        if flow is None:
            print(f"no nowhere-zero {args.k}-flow", file=sys.stderr)
            return EXIT_FALSE
        sys.stdout.write(formats.dumps(formats.flow_to_obj(flow, args.k)))
        return EXIT_OK
    if args.action == "verify":
        flow, k = formats.flow_from_obj(formats.loads(_read(args.file)))
        res = verify_nzf(flow.graph, flow, k)
        print("valid" if res else f"INVALID: {res.reason}")
        return EXIT_OK if res else EXIT_FALSE
    raise ParseError(f"unknown nzf action {args.action!r}")


def cmd_realize(args) -> int:
    text = args.sequence
    try:
        xs_text, ys_text = text.split(";")
        xs = tuple(int(x) for x in xs_text.replace(",", " ").split())
        ys = tuple(int(y) for y in ys_text.replace(",", " ").split())
    except ValueError:
        raise ParseError("expected '<x1,..,xn>;<y1,..,ym>'")
    G = realize_connected(DegreeSequence(xs, ys), args.mu, budget=args.budget)
    kappa, _ = edge_connectivity(G)
    print(f"c edge connectivity {kappa}")
    sys.stdout.write(formats.emit_graph(G))
    return EXIT_OK


def cmd_filter(args) -> int:
    G = _load_graph(args.file)
    res = counterexample_filter(G)
    if res:
        print("passes all minimal-counterexample conditions")
        return EXIT_OK
    for f in res.failures:
        print(f"fails: {f}")
    return EXIT_FALSE


def cmd_graph(args) -> int:
    if args.which == "gap":
        sys.stdout.write(formats.emit_graph(se_gap_graph()))
        return EXIT_OK
    from .graph import (
        complete_bipartite,
        complete_graph,
        cycle_graph,
        hypercube,
        petersen,
        wheel,
    )

    builders = {
        "petersen": lambda p: petersen(),
        "cycle": lambda p: cycle_graph(int(p[0])),
        "complete": lambda p: complete_graph(int(p[0])),
        "complete-bipartite": lambda p: complete_bipartite(int(p[0]), int(p[1])),
        "wheel": lambda p: wheel(int(p[0])),
        "hypercube": lambda p: hypercube(int(p[0])),
    }
    if args.which not in builders:
        raise ParseError(f"unknown graph {args.which!r}")
    sys.stdout.write(formats.emit_graph(builders[args.which](args.params)))
    return EXIT_OK


def cmd_repro(args) -> int:
    from .repro import run_all

    selected = None
    if args.claims:
        selected = [int(x) for x in args.claims.split(",")]
    return EXIT_OK if run_all(selected) else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="simedge",
        description="Simultaneous edge colorings and their equivalent objects",
    )
    p.add_argument(
        "--budget",
        type=int,
        default=None,
        help="search node budget (default 10^8)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="verify any interchange object")
    s.add_argument("file")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("solve", help="decide or optimize simultaneous colorings")
    s.add_argument("graph")
    s.add_argument("--mu", type=int, default=2)
    s.add_argument("--colors", type=int, default=None, help="decide at exactly l")
    s.add_argument("--max-colors", type=int, default=None)
    s.add_argument(
        "--chromatic-index", action="store_true", help="print the chromatic index"
    )
    s.set_defaults(fn=cmd_solve)

    s = sub.add_parser("construct", help="build a colored family member")
    s.add_argument(
        "family",
        choices=[
            "wheel",
            "complete",
            "complete-bipartite",
            "join",
            "cartesian",
            "cartesian-regular",
            "lex",
            "subdivide",
            "hamiltonian",
        ],
    )
    s.add_argument("params", nargs="*")
    s.set_defaults(fn=cmd_construct)

    s = sub.add_parser("trade", help="Latin trade operations")
    s.add_argument("action", choices=["to-graph", "from-graph", "verify", "spectrum"])
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--symmetric", action="store_true")
    s.add_argument("--mu", type=int, default=2)
    s.add_argument("--max-volume", type=int, default=8)
    s.set_defaults(fn=cmd_trade)

    s = sub.add_parser("cdc", help="cycle double cover operations")
    s.add_argument(
        "action",
        choices=[
            "verify",
            "from-se",
            "to-se",
            "enumerate-even",
            "se-to-ocdc",
            "ocdc-to-se",
        ],
    )
    s.add_argument("file", help="input path or - for stdin")
    s.add_argument("--limit", type=int, default=10_000)
    s.add_argument("--up-to-automorphism", action="store_true")
    s.set_defaults(fn=cmd_cdc)

    s = sub.add_parser("nzf", help="nowhere-zero flow operations")
    s.add_argument("action", choices=["find", "verify"])
    s.add_argument("file", help="input path or - for stdin")
    s.add_argument("--k", type=int, default=4)
    s.set_defaults(fn=cmd_nzf)

    s = sub.add_parser("realize", help="mu-edge-connected bipartite realization")
    s.add_argument("sequence", help="e.g. '3,3,3,4;3,3,3,4'")
    s.add_argument("--mu", type=int, default=2)
    s.set_defaults(fn=cmd_realize)

    s = sub.add_parser("filter", help="minimal-counterexample condition filter")
    s.add_argument("file", help="input path or - for stdin")
    s.set_defaults(fn=cmd_filter)

    s = sub.add_parser("graph", help="emit a named graph in the text format")
    s.add_argument("which")
    s.add_argument("params", nargs="*")
    s.set_defaults(fn=cmd_graph)

    s = sub.add_parser("repro", help="run the claim-by-claim acceptance table")
    s.add_argument("--claims", default=None, help="comma-separated claim numbers")
    s.set_defaults(fn=cmd_repro)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses status 2 for usage errors; 2 means "verified false" here
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (SearchBudgetExceeded, LimitExceeded) as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NoOcdcFound as exc:
        print(f"no cover: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except (ParseError, PreconditionViolated, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SimedgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
