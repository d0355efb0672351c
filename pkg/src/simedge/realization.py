"""Bipartite degree-sequence realization and edge-connectivity improvement.

realize_connected operationalizes an extremal switching proof as local
search: the move set swaps one circuit edge from each side of a minimum cut
(endpoint neighborhoods confined to their side, X-endpoints aligned, so the
swap stays simple and bipartite), and a move is accepted only when the
potential (edge connectivity, -number of minimum cuts) strictly improves
lexicographically.
"""
from __future__ import annotations

from .budget import BudgetCounter
from .errors import ElementBelowMu, NotGraphic, SearchBudgetExceeded
from .graph import (
    DegreeSequence,
    Edge,
    Graph,
    bridges,
    connected_components,
    edge_connectivity,
    norm_edge,
)


def realize_bipartite(S: DegreeSequence) -> Graph | None:
    """Greedy maximal-first realization; None iff S is not bipartite graphic.

    X vertices come first (1..n), positional degrees are preserved exactly.
    """
    xs, ys = S.x_degrees, S.y_degrees
    if not S.bipartite:
        raise ValueError("general degree sequences are out of scope")
    if sum(xs) != sum(ys):
        return None
    n, m = len(xs), len(ys)
    if any(d > m for d in xs) or any(d > n for d in ys):
        return None
    residual = list(ys)
    edges: list[Edge] = []
    # largest X-degree first; each X vertex connects to the currently largest
    # residual Y-degrees (classical greedy: succeeds exactly when graphic)
    for xi in sorted(range(n), key=lambda i: (-xs[i], i)):
        need = xs[xi]
        targets = sorted(range(m), key=lambda j: (-residual[j], j))[:need]
        if len(targets) < need or any(residual[j] <= 0 for j in targets):
            return None
        for j in targets:
            residual[j] -= 1
            edges.append((xi + 1, n + j + 1))
    if any(residual):
        return None
    G = Graph(
        n + m,
        tuple(edges),
        bipartition=(frozenset(range(1, n + 1)), frozenset(range(n + 1, n + m + 1))),
    )
    assert [G.degrees[i + 1] for i in range(n)] == list(xs)
    assert [G.degrees[n + j + 1] for j in range(m)] == list(ys)
    return G


def _count_min_cuts(G: Graph, kappa: int) -> int:
    """Number of edge cuts of size kappa, by subset enumeration (vertex 1 is
    pinned to one side so each cut is counted once)."""
    n = G.vertex_count
    if n > 20:
        raise SearchBudgetExceeded("min-cut counting limited to 20 vertices")
    emasks = [(1 << (u - 1), 1 << (v - 1)) for u, v in G.edges]
    count = 0
    for s in range(1 << (n - 1)):
        side = (s << 1) | 1  # vertex 1 always inside
        if side == (1 << n) - 1:
            continue
        size = 0
        for bu, bv in emasks:
            if bool(side & bu) != bool(side & bv):
                size += 1
                if size > kappa:
                    break
        if size == kappa:
            count += 1
    return count


def _potential(G: Graph) -> tuple[int, int]:
    kappa, _ = edge_connectivity(G)
    return kappa, -_count_min_cuts(G, kappa)


def _replace_edges(G: Graph, remove: set[Edge], add: set[Edge]) -> Graph:
    edges = [e for e in G.edges if e not in remove] + sorted(add)
    return Graph(G.vertex_count, tuple(edges), bipartition=G.bipartition)


def _oriented(G: Graph, e: Edge) -> tuple[int, int]:
    """Write edge e as (x, y) with x on the X side."""
    x_side = G.bipartition[0]
    return e if e[0] in x_side else (e[1], e[0])


def _merge_components(G: Graph) -> Graph:
    """Standard 2-swap joining the first two components (degree-preserving,
    cannot create parallel edges across components)."""
    comps = connected_components(G)
    comp_a = comps[0]
    comp_b = comps[1]
    e1 = next(e for e in G.edges if e[0] in comp_a)
    e2 = next(e for e in G.edges if e[0] in comp_b)
    x1, y1 = _oriented(G, e1)
    x2, y2 = _oriented(G, e2)
    return _replace_edges(
        G, {e1, e2}, {norm_edge(x1, y2), norm_edge(x2, y1)}
    )


def _side_candidates(G: Graph, side: set[int]) -> list[Edge]:
    """Circuit edges inside one cut side whose endpoints have all their
    neighbors inside that side."""
    inner = [e for e in G.edges if e[0] in side and e[1] in side]
    if not inner:
        return []
    relabel = {v: i + 1 for i, v in enumerate(sorted(side))}
    back = {i: v for v, i in relabel.items()}
    H = Graph(len(side), tuple((relabel[u], relabel[v]) for u, v in inner))
    hb = bridges(H)
    out = []
    for u, v in inner:
        if norm_edge(relabel[u], relabel[v]) in hb:
            continue
        if all(w in side for w in G.neighbors(u)) and all(
            w in side for w in G.neighbors(v)
        ):
            out.append((u, v))
    return out


def _min_cut_sides(G: Graph, kappa: int) -> list[frozenset[int]]:
    """All minimum-cut sides containing vertex 1, lexicographically sorted."""
    n = G.vertex_count
    if n > 20:
        raise SearchBudgetExceeded("min-cut enumeration limited to 20 vertices")
    emasks = [(1 << (u - 1), 1 << (v - 1)) for u, v in G.edges]
    sides = []
    for s in range(1 << (n - 1)):
        side = (s << 1) | 1
        if side == (1 << n) - 1:
            continue
        size = 0
        for bu, bv in emasks:
            if bool(side & bu) != bool(side & bv):
                size += 1
                if size > kappa:
                    break
        if size == kappa:
            sides.append(
                frozenset(v for v in range(1, n + 1) if side >> (v - 1) & 1)
            )
    return sorted(sides, key=lambda s: tuple(sorted(s)))


def _repair_side(
    G: Graph, side: frozenset[int], counter: BudgetCounter
) -> Graph | None:
    """Replace one cut side's edges with a bridgeless realization of its own
    degree sequence (the proof's r = 2 repair), if the side has a bridge."""
    inner = [e for e in G.edges if e[0] in side and e[1] in side]
    if not inner:
        return None
    xs = sorted(v for v in side if v in G.bipartition[0])
    ys = sorted(v for v in side if v in G.bipartition[1])
    deg_in = {v: 0 for v in side}
    for u, v in inner:
        deg_in[u] += 1
        deg_in[v] += 1
    sub = DegreeSequence(
        tuple(deg_in[v] for v in xs), tuple(deg_in[v] for v in ys)
    )
    if not sub.x_degrees or not sub.y_degrees or min(sub.x_degrees + sub.y_degrees) < 2:
        return None
    try:
        H = realize_connected(sub, 2, budget=counter.limit - counter.used)
    except (NotGraphic, ElementBelowMu, SearchBudgetExceeded):
        return None
    nx = len(xs)
    back = {i + 1: v for i, v in enumerate(xs)}
    back.update({nx + j + 1: v for j, v in enumerate(ys)})
    new_inner = {norm_edge(back[u], back[v]) for u, v in H.edges}
    return _replace_edges(G, set(inner), new_inner)


def realize_connected(
    S: DegreeSequence, mu: int, budget: int | None = None
) -> Graph:
    """A realization of S with edge connectivity at least mu (mu >= 2).

    Every element of S must be >= mu.  Local search moves are accepted only
    when the potential strictly improves; exhausting the move set raises
    rather than returning a sub-mu graph.
    """
    if mu < 2:
        raise ValueError("mu must be at least 2")
    if min(S.x_degrees + S.y_degrees, default=0) < mu:
        raise ElementBelowMu(f"all elements must be at least mu={mu}")
    G = realize_bipartite(S)
    if G is None:
        raise NotGraphic("sequence is not bipartite graphic")
    counter = BudgetCounter(budget, label="realize_connected")
    while True:
        counter.spend()
        comps = connected_components(G)
        if len(comps) > 1:
            G = _merge_components(G)  # strictly fewer components
            continue
        kappa, _ = edge_connectivity(G)
        if kappa >= mu:
            return G
        pot = (kappa, -_count_min_cuts(G, kappa))
        improved = None
        for side in _min_cut_sides(G, kappa):
            other = frozenset(G.vertices()) - side
            cand1 = _side_candidates(G, set(side))
            cand2 = _side_candidates(G, set(other))
            for e1 in cand1:
                x1, y1 = _oriented(G, e1)
                for e2 in cand2:
                    counter.spend()
                    x2, y2 = _oriented(G, e2)
                    H = _replace_edges(
                        G,
                        {norm_edge(*e1), norm_edge(*e2)},
                        {norm_edge(x1, y2), norm_edge(x2, y1)},
                    )
                    if not _is_connected_quick(H):
                        continue
                    k2, _ = edge_connectivity(H)
                    if k2 > kappa:
                        improved = H
                    elif k2 == kappa:
                        if -_count_min_cuts(H, k2) > pot[1]:
                            improved = H
                    if improved is not None:
                        break
                if improved is not None:
                    break
            if improved is None and kappa == 2 and mu >= 3:
                for piece in (side, other):
                    sub_edges = [
                        e for e in G.edges if e[0] in piece and e[1] in piece
                    ]
                    if not sub_edges:
                        continue
                    relabel = {v: i + 1 for i, v in enumerate(sorted(piece))}
                    Hp = Graph(
                        len(piece),
                        tuple((relabel[u], relabel[v]) for u, v in sub_edges),
                    )
                    if bridges(Hp):
                        repaired = _repair_side(G, piece, counter)
                        if repaired is not None and _potential(repaired) > pot:
                            improved = repaired
                            break
            if improved is not None:
                break
        if improved is None:
            raise SearchBudgetExceeded(
                "no improving switch found (implementation gap, not math)"
            )
        G = improved


def _is_connected_quick(G: Graph) -> bool:
    return len(connected_components(G)) == 1
