"""Isomorph-free enumeration of small graphs for exhaustive cross-checks.

Canonical forms are minimum adjacency codes over degree-respecting vertex
permutations, found by backtracking with prefix pruning; fine for the
certificate-sized graphs this package works with.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import Edge, Graph, norm_edge


def canonical_code(n: int, edges: tuple[Edge, ...]) -> tuple[int, ...]:
    """Maximum adjacency code over vertex orderings.

    The code lists, for each position k, the bitmask of neighbors of the k-th
    placed vertex among positions 0..k-1.  Maximizing packs adjacencies to
    the front, so prefix pruning cuts the permutation tree hard; the first
    position is restricted to maximum-degree vertices (an isomorphism
    invariant, so isomorphic graphs still get equal codes).
    """
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    deg = {v: len(adj[v]) for v in adj}
    maxdeg = max(deg.values(), default=0)
    best: list[int] | None = None
    placed: list[int] = []
    code: list[int] = []

    def rec():
        nonlocal best
        k = len(placed)
        if k == n:
            if best is None or code > best:
                best = list(code)
            return
        used = set(placed)
        cands = []
        for v in range(1, n + 1):
            if v in used:
                continue
            if k == 0 and deg[v] != maxdeg:
                continue
            row = 0
            for i, u in enumerate(placed):
                if u in adj[v]:
                    row |= 1 << i
            cands.append((row, deg[v], v))
        cands.sort(reverse=True)
        for row, _, v in cands:
            code.append(row)
            if best is None or code >= best[: len(code)]:
                placed.append(v)
                rec()
                placed.pop()
            code.pop()

    rec()
    assert best is not None
    return tuple(best)


@lru_cache(maxsize=None)
def connected_graphs(max_edges: int) -> tuple[Graph, ...]:
    """All connected graphs with 1..max_edges edges (no isolated vertices),
    one per isomorphism class, generated by edge extension with canonical
    rejection."""
    first = Graph(2, ((1, 2),))
    levels: list[list[Graph]] = [[first]]
    out = [first]
    for m in range(1, max_edges):
        nxt: dict[tuple[int, tuple[int, ...]], Graph] = {}
        for G in levels[-1]:
            n = G.vertex_count
            existing = set(G.edges)
            candidates = [
                e
                for e in combinations(range(1, n + 1), 2)
                if e not in existing
            ]
            candidates += [(v, n + 1) for v in range(1, n + 1)]
            for e in candidates:
                edges = G.edges + (norm_edge(*e),)
                nn = max(n, e[1])
                key = (nn, canonical_code(nn, edges))
                if key not in nxt:
                    nxt[key] = Graph(nn, edges)
        levels.append(list(nxt.values()))
        out.extend(levels[-1])
    return tuple(out)


def _even_masks(n: int, max_edges: int) -> list[int]:
    """Edge masks of all even subgraphs of K_n with at most max_edges edges,
    via Gray-code iteration over the triangle cycle basis."""
    pairs = list(combinations(range(1, n + 1), 2))
    index = {e: i for i, e in enumerate(pairs)}
    gens = []
    for i, j in combinations(range(2, n + 1), 2):
        gens.append(
            (1 << index[(1, i)]) | (1 << index[(1, j)]) | (1 << index[(i, j)])
        )
    out = []
    mask = 0
    total = 1 << len(gens)
    for t in range(1, total):
        mask ^= gens[(t & -t).bit_length() - 1]
        if mask.bit_count() <= max_edges:
            out.append(mask)
    return out


@lru_cache(maxsize=None)
def even_connected_graphs(max_edges: int = 10) -> tuple[Graph, ...]:
    """All connected graphs with every degree even and <= max_edges edges,
    up to isomorphism (max_edges <= 10).

    Support sizes up to 8 come from exhausting the cycle space of K_8.  A
    connected even graph has minimum degree 2, so its edge count is at least
    its vertex count; with at most 10 edges the only graphs on 9 or 10
    vertices are C_9, C_10, and (9 vertices, 10 edges: degree sum 20 forces
    exactly one degree-4 vertex) the two circuits sharing one vertex with
    lengths (3,7), (4,6), (5,5).
    """
    if max_edges > 10:
        raise ValueError("enumeration is sized for at most 10 edges")
    seen: dict[tuple[int, tuple[int, ...]], Graph] = {}
    pairs = list(combinations(range(1, 9), 2))
    support_masks = [0] * len(pairs)
    adj_bits = {v: 0 for v in range(1, 9)}
    for i, (u, v) in enumerate(pairs):
        support_masks[i] = (1 << (u - 1)) | (1 << (v - 1))
    for mask in _even_masks(8, max_edges):
        bits = []
        mm = mask
        support = 0
        while mm:
            b = mm & -mm
            mm ^= b
            i = b.bit_length() - 1
            bits.append(i)
            support |= support_masks[i]
        k = support.bit_length()
        if support != (1 << k) - 1:
            continue  # only prefix supports; every class has one
        reach = 1
        while True:
            grow = reach
            for i in bits:
                if support_masks[i] & reach:
                    grow |= support_masks[i]
            if grow == reach:
                break
            reach = grow
        if reach != support:
            continue
        edges = tuple(pairs[i] for i in bits)
        key = (k, canonical_code(k, edges))
        if key not in seen:
            seen[key] = Graph(k, edges)
    extras = []
    if max_edges >= 9:
        extras.append(_cycle(9))
    if max_edges >= 10:
        extras.append(_cycle(10))
        for a, b in ((3, 7), (4, 6), (5, 5)):
            extras.append(_figure_eight(a, b))
    for G in extras:
        key = (G.vertex_count, canonical_code(G.vertex_count, G.edges))
        seen.setdefault(key, G)
    return tuple(seen.values())


def _cycle(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def _figure_eight(a: int, b: int) -> Graph:
    """Two circuits of lengths a and b sharing exactly vertex 1."""
    edges = [(i, i + 1) for i in range(1, a)] + [(1, a)]
    off = a
    second = [(off + i, off + i + 1) for i in range(1, b - 1)]
    edges += second + [(1, off + 1), (1, off + b - 1)]
    return Graph(a + b - 1, tuple(edges))
