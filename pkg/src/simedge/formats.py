"""File formats: the line-oriented graph format and the JSON interchange.

Graph text format (DIMACS-adjacent):

    c free-text comment
    p sec <vertices> <edges>
    b <k>              optional: vertices 1..k form side X
    e <u> <v>          one line per edge

All structured objects (colorings, trades, covers, flows) share one
self-describing JSON tree with a "kind" tag; serialization is deterministic
(sorted keys, fixed separators), so identical objects give identical bytes.
"""
from __future__ import annotations

import json
from typing import Any

from .cdcflow import CycleDoubleCover, IntegerFlow, OrientedCDC
from .coloring import EdgeColoring, SimultaneousColoring
from .errors import (
    BipartitionViolation,
    DuplicateEdge,
    LoopEdge,
    ParseError,
)
from .graph import Graph, norm_edge
from .trades import LatinTrade, PartialLatinSquare


def parse_graph(text: str) -> Graph:
    n = m = None
    b = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "sec":
                raise ParseError("expected 'p sec <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("vertex/edge counts must be integers", lineno)
            if n < 1 or m < 0:
                raise ParseError("counts out of range", lineno)
        elif parts[0] == "b":
            if n is None:
                raise ParseError("b line before problem line", lineno)
            if b is not None:
                raise ParseError("duplicate b line", lineno)
            try:
                b = int(parts[1])
            except (IndexError, ValueError):
                raise ParseError("expected 'b <k>'", lineno)
            if not (0 <= b <= n):
                raise ParseError(f"bipartition size {b} out of 0..{n}", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("endpoints must be integers", lineno)
            if u == v:
                raise LoopEdge(f"loop at vertex {u}", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge ({u},{v}) outside 1..{n}", lineno)
            e = norm_edge(u, v)
            if e in seen:
                raise DuplicateEdge(f"edge {e} repeated", lineno)
            if b is not None and (e[0] <= b) == (e[1] <= b):
                raise BipartitionViolation(
                    f"edge {e} does not cross the bipartition", lineno
                )
            seen.add(e)
            edges.append(e)
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    if m is not None and m != len(edges):
        raise ParseError(f"problem line declares {m} edges, found {len(edges)}")
    bip = None
    if b is not None:
        bip = (frozenset(range(1, b + 1)), frozenset(range(b + 1, n + 1)))
    return Graph(n, tuple(edges), bipartition=bip)


def emit_graph(G: Graph) -> str:
    lines = [f"p sec {G.vertex_count} {len(G.edges)}"]
    if G.bipartition is not None:
        k = len(G.bipartition[0])
        if G.bipartition[0] != frozenset(range(1, k + 1)):
            raise ValueError(
                "text format only supports prefix bipartitions (X = 1..k)"
            )
        lines.append(f"b {k}")
    lines += [f"e {u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def _graph_obj(G: Graph) -> dict[str, Any]:
    bsize = None
    if G.bipartition is not None:
        k = len(G.bipartition[0])
        if G.bipartition[0] != frozenset(range(1, k + 1)):
            raise ValueError("interchange requires prefix bipartitions")
        bsize = k
    return {
        "vertex_count": G.vertex_count,
        "bipartition_size": bsize,
        "edges": [list(e) for e in G.edges],
    }


def _graph_from_obj(obj: dict[str, Any]) -> Graph:
    bip = None
    if obj.get("bipartition_size") is not None:
        k = obj["bipartition_size"]
        n = obj["vertex_count"]
        bip = (frozenset(range(1, k + 1)), frozenset(range(k + 1, n + 1)))
    return Graph(
        obj["vertex_count"],
        tuple(tuple(e) for e in obj["edges"]),
        bipartition=bip,
    )


def coloring_to_obj(sc: SimultaneousColoring) -> dict[str, Any]:
    return {
        "kind": "coloring",
        "graph": _graph_obj(sc.graph),
        "mu": sc.mu,
        "num_colors": sc.num_colors,
        "edges": [list(e) for e in sc.graph.edges],
        "colors": [list(sc.tuple_of(e)) for e in sc.graph.edges],
    }


def coloring_from_obj(obj: dict[str, Any]) -> SimultaneousColoring:
    G = _graph_from_obj(obj["graph"])
    mu = obj["mu"]
    per_edge = {
        tuple(e): tuple(cs) for e, cs in zip(obj["edges"], obj["colors"])
    }
    colorings = tuple(
        EdgeColoring(
            G, obj["num_colors"], tuple(per_edge[e][i] for e in G.edges)
        )
        for i in range(mu)
    )
    return SimultaneousColoring(G, mu, obj["num_colors"], colorings)


def trade_to_obj(T: LatinTrade) -> dict[str, Any]:
    shape = sorted(T.squares[0].shape)
    return {
        "kind": "trade",
        "mu": T.mu,
        "rows": T.squares[0].rows,
        "cols": T.squares[0].cols,
        "symmetric": T.symmetric,
        "cells": [
            {
                "r": r,
                "c": c,
                "symbols": [sq.entry(r, c) for sq in T.squares],
            }
            for r, c in shape
        ],
    }


def trade_from_obj(obj: dict[str, Any]) -> LatinTrade:
    rows, cols, mu = obj["rows"], obj["cols"], obj["mu"]
    squares = []
    for t in range(mu):
        cells = tuple(
            (cell["r"], cell["c"], cell["symbols"][t]) for cell in obj["cells"]
        )
        squares.append(PartialLatinSquare(rows, cols, cells))
    return LatinTrade(mu, tuple(squares), symmetric=obj.get("symmetric", False))


def cdc_to_obj(cover: CycleDoubleCover) -> dict[str, Any]:
    return {
        "kind": "cdc",
        "graph": _graph_obj(cover.graph),
        "circuits": [list(c) for c in cover.circuits],
        "classes": (
            None
            if cover.classes is None
            else [list(cls) for cls in cover.classes]
        ),
        "circuit_colorings": (
            None
            if cover.circuit_colorings is None
            else [list(cols) for cols in cover.circuit_colorings]
        ),
    }


def cdc_from_obj(obj: dict[str, Any]) -> CycleDoubleCover:
    return CycleDoubleCover(
        _graph_from_obj(obj["graph"]),
        tuple(tuple(c) for c in obj["circuits"]),
        None
        if obj.get("classes") is None
        else tuple(tuple(cls) for cls in obj["classes"]),
        None
        if obj.get("circuit_colorings") is None
        else tuple(tuple(cols) for cols in obj["circuit_colorings"]),
    )


def ocdc_to_obj(cover: OrientedCDC) -> dict[str, Any]:
    return {
        "kind": "ocdc",
        "graph": _graph_obj(cover.graph),
        "directed_circuits": [list(c) for c in cover.circuits],
    }


def ocdc_from_obj(obj: dict[str, Any]) -> OrientedCDC:
    return OrientedCDC(
        _graph_from_obj(obj["graph"]),
        tuple(tuple(c) for c in obj["directed_circuits"]),
    )


def flow_to_obj(flow: IntegerFlow, k: int) -> dict[str, Any]:
    return {
        "kind": "flow",
        "graph": _graph_obj(flow.graph),
        "k": k,
        "orientations": [list(d) for d in flow.orientation],
        "weights": list(flow.weights),
    }


def flow_from_obj(obj: dict[str, Any]) -> tuple[IntegerFlow, int]:
    flow = IntegerFlow(
        _graph_from_obj(obj["graph"]),
        tuple(tuple(d) for d in obj["orientations"]),
        tuple(obj["weights"]),
    )
    return flow, obj["k"]


def dumps(obj: dict[str, Any]) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def loads(text: str) -> dict[str, Any]:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("interchange objects need a 'kind' tag")
    return obj
