"""(Simultaneous) edge colorings: verification, exact decision, exact optima.

A mu-simultaneous edge coloring is a tuple of mu proper edge colorings over a
shared color set [l] such that every vertex sees the same color set in each
coordinate and every edge gets mu pairwise distinct colors.

The decision search is complete backtracking over edges; each edge receives
its whole mu-tuple at once so the edge-distinctness constraint bites first.
Color sets are bitmasks (bit c set = color c present, colors are 1-based).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .budget import BudgetCounter
from .errors import NotTwoSimultaneous, PreconditionViolated
from .graph import Edge, Graph, bridges, girth, is_bipartite, is_two_connected, norm_edge


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of colors 1..num_colors to the edges of a graph."""

    graph: Graph
    num_colors: int
    colors: tuple[int, ...]  # aligned with graph.edges

    def __post_init__(self):
        if len(self.colors) != len(self.graph.edges):
            raise ValueError("one color per edge required")
        if any(c < 1 or c > self.num_colors for c in self.colors):
            raise ValueError("colors must lie in 1..num_colors")

    def color_of(self, e: Edge) -> int:
        return self.colors[self.graph.edge_index[norm_edge(*e)]]

    def color_class(self, c: int) -> set[Edge]:
        return {e for e, col in zip(self.graph.edges, self.colors) if col == c}


@dataclass(frozen=True)
class SimultaneousColoring:
    """mu parallel edge colorings sharing the color set 1..num_colors."""

    graph: Graph
    mu: int
    num_colors: int
    colorings: tuple[EdgeColoring, ...]

    def __post_init__(self):
        if len(self.colorings) != self.mu:
            raise ValueError("exactly mu colorings required")
        for c in self.colorings:
            if c.graph is not self.graph and c.graph != self.graph:
                raise ValueError("all colorings must live on the same graph")
            if c.num_colors != self.num_colors:
                raise ValueError("all colorings must share num_colors")

    def tuple_of(self, e: Edge) -> tuple[int, ...]:
        return tuple(c.color_of(e) for c in self.colorings)

    def drop_coordinates(self, keep: int) -> "SimultaneousColoring":
        """Restriction to the first `keep` coordinates (still simultaneous)."""
        return SimultaneousColoring(
            self.graph, keep, self.num_colors, self.colorings[:keep]
        )


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    @property
    def reason(self) -> str:
        return "; ".join(self.failures) if self.failures else "ok"


def _fail(*msgs: str) -> CheckResult:
    return CheckResult(False, tuple(msgs))


_OK = CheckResult(True)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def verify_proper(c: EdgeColoring) -> CheckResult:
    """Proper iff no two incident edges share a color."""
    G = c.graph
    for v in G.vertices():
        seen: dict[int, Edge] = {}
        for w, idx in G.adjacency[v]:
            col = c.colors[idx]
            if col in seen:
                return _fail(
                    f"vertex {v}: edges {seen[col]} and {norm_edge(v, w)} "
                    f"both colored {col}"
                )
            seen[col] = norm_edge(v, w)
    return _OK


def palettes(c: EdgeColoring) -> dict[int, frozenset[int]]:
    G = c.graph
    return {
        v: frozenset(c.colors[idx] for _, idx in G.adjacency[v])
        for v in G.vertices()
    }


def verify_simultaneous(sc: SimultaneousColoring) -> CheckResult:
    """Check properness, per-vertex palette equality, and edge distinctness.

    Also runs the necessary condition mu <= deg(v) on non-isolated vertices;
    it is implied by the three invariants but is cheap and catches corrupted
    inputs early.
    """
    G = sc.graph
    if G.edges and sc.mu > min(d for d in G.degrees.values() if d > 0):
        return _fail(f"mu={sc.mu} exceeds the minimum positive degree")
    for i, c in enumerate(sc.colorings, start=1):
        res = verify_proper(c)
        if not res:
            return _fail(f"coordinate {i} not proper", *res.failures)
    pal0 = palettes(sc.colorings[0])
    for i, c in enumerate(sc.colorings[1:], start=2):
        pal = palettes(c)
        for v in G.vertices():
            if pal[v] != pal0[v]:
                return _fail(
                    f"palette mismatch at vertex {v}: coordinate 1 sees "
                    f"{sorted(pal0[v])}, coordinate {i} sees {sorted(pal[v])}"
                )
    for e in G.edges:
        t = sc.tuple_of(e)
        if len(set(t)) != len(t):
            return _fail(f"edge {e} repeats a color across coordinates: {t}")
    return _OK


# ---------------------------------------------------------------------------
# exact search
# ---------------------------------------------------------------------------

def _search(
    G: Graph, mu: int, num_colors: int, counter: BudgetCounter
) -> list[tuple[int, ...]] | None:
    """Complete backtracking for a mu-simultaneous coloring with num_colors.

    Returns per-edge color tuples aligned with G.edges, or None (exhausted).
    Symmetry breaking: scanning edges in search order and coordinates in
    order, a previously unused color may only enter as max_used + 1; every
    valid coloring has exactly one such representative under a global color
    permutation, so the restriction preserves completeness.
    """
    m = len(G.edges)
    edges = G.edges
    deg = G.degrees
    n = G.vertex_count
    # densest endpoints first: the tuple constraints bind earliest there
    order = sorted(range(m), key=lambda i: (-(deg[edges[i][0]] + deg[edges[i][1]]), i))
    seen = [[0] * mu for _ in range(n + 1)]  # seen[v][i]: colors at v, coord i
    union = [0] * (n + 1)  # union over coordinates of seen[v]
    rem = [0] * (n + 1)  # uncolored edges at v
    for u, v in edges:
        rem[u] += 1
        rem[v] += 1
    assignment: list[tuple[int, ...] | None] = [None] * m
    full_mask = ((1 << (num_colors + 1)) - 1) & ~1  # bits 1..num_colors

    def tuples_for(u: int, v: int, max_used: int):
        """Yield admissible color tuples for edge (u,v), symmetry-reduced."""
        # forced completions: when this is the last edge at w (mu >= 2), the
        # palette union must already have full size and each coordinate is
        # forced to its single missing color
        force_u = force_v = False
        if mu >= 2:
            if rem[u] == 1:
                if (union[u]).bit_count() != deg[u]:
                    return
                force_u = True
            if rem[v] == 1:
                if (union[v]).bit_count() != deg[v]:
                    return
                force_v = True
        chosen: list[int] = []

        def extend(i: int, tmp_max: int, chosen_mask: int):
            if i == mu:
                yield tuple(chosen)
                return
            avail = full_mask & ~(seen[u][i] | seen[v][i] | chosen_mask)
            if force_u:
                avail &= union[u] & ~seen[u][i]
            if force_v:
                avail &= union[v] & ~seen[v][i]
            cap = min(num_colors, tmp_max + 1)
            avail &= (1 << (cap + 1)) - 1
            while avail:
                bit = avail & -avail
                avail ^= bit
                c = bit.bit_length() - 1
                chosen.append(c)
                yield from extend(i + 1, max(tmp_max, c), chosen_mask | bit)
                chosen.pop()

        yield from extend(0, max_used, 0)

    def backtrack_outer(pos: int, max_used: int) -> bool:
        if pos == m:
            return True
        counter.spend()
        eidx = order[pos]
        u, v = edges[eidx]
        found = False
        for t in tuples_for(u, v, max_used):
            old_u, old_v = union[u], union[v]
            tmask = 0
            for i, c in enumerate(t):
                bit = 1 << c
                seen[u][i] |= bit
                seen[v][i] |= bit
                tmask |= bit
            union[u] = old_u | tmask
            union[v] = old_v | tmask
            if union[u].bit_count() <= deg[u] and union[v].bit_count() <= deg[v]:
                rem[u] -= 1
                rem[v] -= 1
                assignment[eidx] = t
                if backtrack_outer(pos + 1, max(max_used, max(t))):
                    found = True
                rem[u] += 1
                rem[v] += 1
            for i, c in enumerate(t):
                bit = 1 << c
                seen[u][i] &= ~bit
                seen[v][i] &= ~bit
            union[u], union[v] = old_u, old_v
            if found:
                return True
            assignment[eidx] = None
        return False

    if backtrack_outer(0, 0):
        return [assignment[i] for i in range(m)]  # type: ignore[misc]
    return None


def _build_sc(G: Graph, mu: int, num_colors: int, tuples) -> SimultaneousColoring:
    colorings = tuple(
        EdgeColoring(G, num_colors, tuple(t[i] for t in tuples)) for i in range(mu)
    )
    return SimultaneousColoring(G, mu, num_colors, colorings)


def decide_mu_se(
    G: Graph, mu: int, num_colors: int, budget: int | None = None
) -> SimultaneousColoring | None:
    """Exhaustively decide existence of a mu-simultaneous coloring with [l].

    Returns a witness coloring or None; a None answer means the complete
    search finished (budget overruns raise instead).
    """
    if mu < 1 or num_colors < 1:
        raise ValueError("mu and num_colors must be positive")
    if not G.edges:
        empty = tuple(EdgeColoring(G, num_colors, ()) for _ in range(mu))
        return SimultaneousColoring(G, mu, num_colors, empty)
    # necessary: every edge's mu distinct colors sit inside both endpoint
    # palettes, so mu can be at most the smallest positive degree
    if mu > min(d for d in G.degrees.values() if d > 0):
        return None
    if num_colors < G.max_degree():
        return None  # no proper coloring at all below the maximum degree
    counter = BudgetCounter(budget, label="decide_mu_se")
    tuples = _search(G, mu, num_colors, counter)
    if tuples is None:
        return None
    sc = _build_sc(G, mu, num_colors, tuples)
    assert verify_simultaneous(sc)
    return sc


def find_proper_coloring(
    G: Graph, num_colors: int, budget: int | None = None
) -> EdgeColoring | None:
    """Backtracking proper edge coloring with at most num_colors colors."""
    sc = decide_mu_se(G, 1, max(num_colors, 1), budget=budget)
    if sc is None:
        return None
    return sc.colorings[0]


def chromatic_index(G: Graph, budget: int | None = None) -> int:
    """Exact chromatic index, searched between the Vizing bounds."""
    if not G.edges:
        return 0
    delta = G.max_degree()
    if find_proper_coloring(G, delta, budget=budget) is not None:
        return delta
    # Vizing: delta + 1 always suffices for simple graphs; the search below
    # is a sanity pass and must succeed
    witness = find_proper_coloring(G, delta + 1, budget=budget)
    assert witness is not None, "simple graph must be (Delta+1)-edge-colorable"
    return delta + 1


def se_chromatic_number(
    G: Graph, mu: int, l_max: int, budget: int | None = None
) -> int | None:
    """Least l <= l_max admitting a mu-simultaneous coloring, else None.

    None means "none up to l_max"; it is not a nonexistence certificate for
    larger color counts.
    """
    if not G.edges:
        return 0
    delta = G.max_degree()
    if l_max < delta:
        raise PreconditionViolated(f"l_max={l_max} is below the lower bound {delta}")
    for l in range(delta, l_max + 1):
        if decide_mu_se(G, mu, l, budget=budget) is not None:
            return l
    return None


# ---------------------------------------------------------------------------
# minimal-counterexample filter and girth bound
# ---------------------------------------------------------------------------

def counterexample_filter(G: Graph) -> CheckResult:
    """Necessary conditions for a minimal non-2-simultaneous bridgeless
    bipartite graph (maximum vertices among minimum edges).

    Reports every failed clause; passing the filter does not make the graph a
    counterexample, it merely survives the necessary conditions.
    """
    failures = []
    if is_bipartite(G) is None:
        failures.append("not bipartite")
    if bridges(G):
        failures.append("has a bridge")
    if not is_two_connected(G):
        failures.append("not 2-connected")
    degs = G.degrees
    if not degs or min(degs.values()) != 2:
        failures.append("minimum degree is not 2")
    if not degs or max(degs.values()) != 3:
        failures.append("maximum degree is not 3")
    if _has_nontrivial_two_cut(G):
        failures.append("has a nontrivial 2-edge-cut")
    for v in G.vertices():
        if degs[v] != 2:
            continue
        H = _delete_vertex(G, v)
        if H.edges and bridges(H):
            failures.append(f"removing degree-2 vertex {v} leaves a bridge")
            break
    for v in G.vertices():
        if degs[v] != 2:
            continue
        u, w = G.neighbors(v)
        common = set(G.neighbors(u)) & set(G.neighbors(w))
        if common != {v}:
            failures.append(
                f"degree-2 vertex {v}: its neighbors share extra neighbors "
                f"{sorted(common - {v})}"
            )
            break
    return CheckResult(not failures, tuple(failures))


def _delete_vertex(G: Graph, v: int) -> Graph:
    keep = [u for u in G.vertices() if u != v]
    relabel = {u: i + 1 for i, u in enumerate(keep)}
    edges = [
        (relabel[a], relabel[b]) for a, b in G.edges if a != v and b != v
    ]
    return Graph(len(keep), tuple(edges))


def _has_nontrivial_two_cut(G: Graph) -> bool:
    """True iff some 2-edge cut leaves two sides with >= 2 vertices each."""
    from .graph import connected_components

    m = len(G.edges)
    for i in range(m):
        for j in range(i + 1, m):
            removed = {G.edges[i], G.edges[j]}
            H = Graph(
                G.vertex_count,
                tuple(e for e in G.edges if e not in removed),
            )
            comps = connected_components(H)
            if len(comps) < 2:
                continue
            # both removed edges must cross between the two pieces for the
            # pair to be an edge cut of size exactly 2
            for comp in comps:
                crossing = [
                    e for e in removed if (e[0] in comp) != (e[1] in comp)
                ]
                if len(crossing) == 2:
                    if 2 <= len(comp) <= G.vertex_count - 2:
                        return True
    return False


def check_girth_bound(
    G: Graph, sc: SimultaneousColoring, k: int, budget: int | None = None
) -> bool:
    """Probe: every valid 2-simultaneous coloring of a bridgeless graph of
    girth >= 2k-1 must satisfy |E| >= k * chromatic_index."""
    if sc.mu != 2 or not verify_simultaneous(sc):
        raise NotTwoSimultaneous("a valid 2-simultaneous coloring is required")
    if bridges(G):
        raise PreconditionViolated("graph has a bridge")
    if girth(G) < 2 * k - 1:
        raise PreconditionViolated(f"girth below {2 * k - 1}")
    return len(G.edges) >= k * chromatic_index(G, budget=budget)
