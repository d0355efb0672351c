"""Simple undirected graphs with optional bipartition, and structural queries.

Vertices are the 1-based contiguous integers 1..vertex_count.  Edge lists are
kept canonically sorted so edge indices are stable across runs; all builders
document their vertex numbering so objects built downstream are reproducible
bit for bit.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import DisconnectedInput, EdgeNotFound, NotRegular

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple graph: no loops, no multi-edges, sorted edge tuple."""

    vertex_count: int
    edges: tuple[Edge, ...]
    bipartition: tuple[frozenset[int], frozenset[int]] | None = None

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise ValueError("vertex_count must be positive")
        normed = sorted(norm_edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", tuple(normed))
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside 1..{n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        if self.bipartition is not None:
            x, y = frozenset(self.bipartition[0]), frozenset(self.bipartition[1])
            object.__setattr__(self, "bipartition", (x, y))
            if x & y or (x | y) != set(range(1, n + 1)):
                raise ValueError("bipartition must split 1..n into disjoint sides")
            for u, v in self.edges:
                if (u in x) == (v in x):
                    raise ValueError(f"edge ({u},{v}) does not cross the bipartition")

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """vertex -> tuple of (neighbor, edge index)."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self.vertices()}
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return {v: tuple(ns) for v, ns in adj.items()}

    @cached_property
    def degrees(self) -> dict[int, int]:
        return {v: len(self.adjacency[v]) for v in self.vertices()}

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_index

    def min_degree(self) -> int:
        return min(self.degrees.values())

    def max_degree(self) -> int:
        return max(self.degrees.values())

    def is_regular(self) -> int | None:
        """Return r when the graph is r-regular, else None."""
        degs = set(self.degrees.values())
        return degs.pop() if len(degs) == 1 else None


@dataclass(frozen=True)
class EdgeCut:
    """An edge cut [S, S-bar] of a host graph."""

    side: frozenset[int]
    cut_edges: frozenset[Edge]

    @property
    def size(self) -> int:
        return len(self.cut_edges)

    def is_nontrivial(self, graph: Graph) -> bool:
        """True iff both sides of the cut keep at least two vertices."""
        return len(self.side) >= 2 and graph.vertex_count - len(self.side) >= 2


@dataclass(frozen=True)
class DegreeSequence:
    """A (bipartite) degree sequence; y_degrees is empty in the general case."""

    x_degrees: tuple[int, ...]
    y_degrees: tuple[int, ...] = ()
    bipartite: bool = True

    def __post_init__(self):
        object.__setattr__(self, "x_degrees", tuple(self.x_degrees))
        object.__setattr__(self, "y_degrees", tuple(self.y_degrees))
        if any(d < 0 for d in self.x_degrees + self.y_degrees):
            raise ValueError("degrees must be nonnegative")

    def is_balanced(self) -> bool:
        if self.bipartite:
            return sum(self.x_degrees) == sum(self.y_degrees)
        return sum(self.x_degrees) % 2 == 0


@dataclass(frozen=True)
class OneFactorization:
    """Partition of a regular graph's edges into perfect matchings."""

    graph: Graph
    factors: tuple[frozenset[Edge], ...]

    def validate(self) -> None:
        union: set[Edge] = set()
        for f in self.factors:
            if union & f:
                raise ValueError("factors are not pairwise disjoint")
            union |= f
            covered = [v for e in f for v in e]
            if sorted(covered) != list(self.graph.vertices()):
                raise ValueError("factor is not a perfect matching")
        if union != set(self.graph.edges):
            raise ValueError("factors do not cover the edge set")


# ---------------------------------------------------------------------------
# structural queries
# ---------------------------------------------------------------------------

def connected_components(G: Graph) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for s in G.vertices():
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) == 1


def is_bipartite(G: Graph) -> tuple[set[int], set[int]] | None:
    """2-color the vertices by BFS layering; None when an odd circuit exists.

    Disconnected graphs get an arbitrary consistent choice per component (the
    smallest vertex of each component lands in X).
    """
    color: dict[int, int] = {}
    for s in G.vertices():
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    x = {v for v, c in color.items() if c == 0}
    y = {v for v, c in color.items() if c == 1}
    return x, y


def bridges(G: Graph) -> set[Edge]:
    """Cut edges, by the standard low-link computation."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    result: set[Edge] = set()
    counter = 0
    for root in G.vertices():
        if root in disc:
            continue
        # iterative DFS; parent_edge tracks the edge index used to enter
        stack = [(root, -1, iter(G.adjacency[root]))]
        disc[root] = low[root] = counter
        counter += 1
        while stack:
            v, pedge, it = stack[-1]
            advanced = False
            for w, eidx in it:
                if eidx == pedge:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eidx, iter(G.adjacency[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        result.add(norm_edge(parent, v))
    return result


def _bfs_max_flow(G: Graph, s: int, t: int) -> tuple[int, set[int]]:
    """Unit-capacity max flow s->t; returns (value, source side of a min cut)."""
    # residual capacities per directed pair
    cap: dict[tuple[int, int], int] = {}
    for u, v in G.edges:
        cap[(u, v)] = 1
        cap[(v, u)] = 1
    flow = 0
    while True:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            v = queue.popleft()
            for w in G.neighbors(v):
                if w not in parent and cap[(v, w)] > 0:
                    parent[w] = v
                    queue.append(w)
        if t not in parent:
            return flow, set(parent)
        w = t
        while w != s:
            v = parent[w]
            cap[(v, w)] -= 1
            cap[(w, v)] += 1
            w = v
        flow += 1


def edge_connectivity(G: Graph) -> tuple[int, EdgeCut]:
    """Exact edge connectivity with a minimum-cut witness.

    Ties among minimum cuts are broken by the lexicographically smallest
    side S (as a sorted vertex tuple).
    """
    if G.vertex_count < 2:
        raise DisconnectedInput("edge connectivity needs at least two vertices")
    if not is_connected(G):
        raise DisconnectedInput("graph is disconnected (edge connectivity 0)")
    best = None
    s = 1
    for t in range(2, G.vertex_count + 1):
        value, side = _bfs_max_flow(G, s, t)
        key = (value, tuple(sorted(side)))
        if best is None or key < best:
            best = key
    value, side_tuple = best
    side = frozenset(side_tuple)
    cut = frozenset(e for e in G.edges if (e[0] in side) != (e[1] in side))
    return value, EdgeCut(side=side, cut_edges=cut)


def girth(G: Graph) -> int | float:
    """Length of a shortest circuit; math.inf for forests.

    For each edge uv, the shortest circuit through uv has length
    1 + dist_{G-uv}(u, v); the minimum over edges is the girth.
    """
    best = math.inf
    for i, (u, v) in enumerate(G.edges):
        dist = {u: 0}
        queue = deque([u])
        while queue:
            a = queue.popleft()
            if a == v or dist[a] + 1 >= best:
                break
            for b, eidx in G.adjacency[a]:
                if eidx != i and b not in dist:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def articulation_vertices(G: Graph) -> set[int]:
    """Cut vertices, via the low-link computation (recursive on small graphs)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts: set[int] = set()
    counter = 0

    def dfs(v: int, parent: int) -> None:
        nonlocal counter
        disc[v] = low[v] = counter
        counter += 1
        children = 0
        for w in G.neighbors(v):
            if w not in disc:
                children += 1
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if parent != -1 and low[w] >= disc[v]:
                    cuts.add(v)
            elif w != parent:
                low[v] = min(low[v], disc[w])
        if parent == -1 and children > 1:
            cuts.add(v)

    for root in G.vertices():
        if root not in disc:
            dfs(root, -1)
    return cuts


def is_two_connected(G: Graph) -> bool:
    return (
        G.vertex_count >= 3
        and is_connected(G)
        and not articulation_vertices(G)
    )


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a circuit needs at least 3 vertices")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


def complete_bipartite(n: int, m: int) -> Graph:
    """K_{n,m} with X = 1..n and Y = n+1..n+m."""
    edges = tuple((i, n + j) for i in range(1, n + 1) for j in range(1, m + 1))
    x = frozenset(range(1, n + 1))
    y = frozenset(range(n + 1, n + m + 1))
    return Graph(n + m, edges, bipartition=(x, y))


def wheel(n: int) -> Graph:
    """W_n: hub vertex 1 joined to the rim circuit 2..n+1."""
    if n < 3:
        raise ValueError("wheel needs a rim of length >= 3")
    rim = [(i, i + 1) for i in range(2, n + 1)] + [(2, n + 1)]
    spokes = [(1, i) for i in range(2, n + 2)]
    return Graph(n + 1, tuple(rim + spokes))


def hypercube(d: int) -> Graph:
    """Q_d with vertex i+1 standing for the bit pattern of i."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    n = 1 << d
    edges = []
    for i in range(n):
        for b in range(d):
            j = i ^ (1 << b)
            if i < j:
                edges.append((i + 1, j + 1))
    return Graph(n, tuple(edges))


def petersen() -> Graph:
    """Outer circuit 1..5, inner pentagram 6..10, spokes i -> i+5."""
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    inner = [norm_edge(5 + i, 5 + (i + 1) % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    return Graph(10, tuple(outer + inner + spokes))


def circulant(n: int, steps: tuple[int, ...]) -> Graph:
    """Circulant graph on 1..n with the given step set."""
    edges = set()
    for i in range(n):
        for s in steps:
            edges.add(norm_edge(i + 1, (i + s) % n + 1))
    return Graph(n, tuple(edges))


# ---------------------------------------------------------------------------
# graph operations
# ---------------------------------------------------------------------------

def join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus all cross edges; G1's vertices come first."""
    n1 = G1.vertex_count
    edges = list(G1.edges)
    edges += [(u + n1, v + n1) for u, v in G2.edges]
    edges += [(u, v + n1) for u in G1.vertices() for v in G2.vertices()]
    return Graph(n1 + G2.vertex_count, tuple(edges))


def product_vertex(u: int, v: int, nH: int) -> int:
    """Numbering for product graphs: (u, v) -> (u-1)*|V(H)| + v."""
    return (u - 1) * nH + v


def cartesian_product(G: Graph, H: Graph) -> Graph:
    nH = H.vertex_count
    edges = []
    for u in G.vertices():
        for a, b in H.edges:
            edges.append((product_vertex(u, a, nH), product_vertex(u, b, nH)))
    for a, b in G.edges:
        for v in H.vertices():
            edges.append((product_vertex(a, v, nH), product_vertex(b, v, nH)))
    return Graph(G.vertex_count * nH, tuple(edges))


def lexicographic_product(G: Graph, H: Graph) -> Graph:
    """G[H]: copies of H glued by complete bipartite bundles along E(G)."""
    nH = H.vertex_count
    edges = []
    for u in G.vertices():
        for a, b in H.edges:
            edges.append((product_vertex(u, a, nH), product_vertex(u, b, nH)))
    for a, b in G.edges:
        for x in H.vertices():
            for y in H.vertices():
                edges.append((product_vertex(a, x, nH), product_vertex(b, y, nH)))
    return Graph(G.vertex_count * nH, tuple(edges))


def subdivide_edge(G: Graph, e: Edge, t: int) -> Graph:
    """Replace edge e by a path through t new vertices numbered n+1..n+t."""
    e = norm_edge(*e)
    if e not in G.edge_index:
        raise EdgeNotFound(f"edge {e} not in graph")
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return G
    n = G.vertex_count
    edges = [f for f in G.edges if f != e]
    chain = [e[0]] + [n + i for i in range(1, t + 1)] + [e[1]]
    edges += [norm_edge(a, b) for a, b in zip(chain, chain[1:])]
    return Graph(n + t, tuple(edges))


# ---------------------------------------------------------------------------
# 1-factorizations
# ---------------------------------------------------------------------------

def _round_robin_factors(n: int) -> list[frozenset[Edge]]:
    """Circle-method 1-factorization of K_n (n even): vertex n is the hub."""
    factors = []
    for r in range(n - 1):
        pairs = {norm_edge(r + 1, n)}
        for k in range(1, n // 2):
            a = (r + k) % (n - 1) + 1
            b = (r - k) % (n - 1) + 1
            pairs.add(norm_edge(a, b))
        factors.append(frozenset(pairs))
    return factors


def _shift_factors(n: int) -> list[frozenset[Edge]]:
    """K_{n,n} factors: x_i -> y_{(i+t) mod n} for t = 0..n-1."""
    factors = []
    for t in range(n):
        factors.append(
            frozenset((i + 1, n + (i + t) % n + 1) for i in range(n))
        )
    return factors


def _hypercube_factors(d: int) -> list[frozenset[Edge]]:
    n = 1 << d
    factors = []
    for b in range(d):
        factors.append(
            frozenset(norm_edge(i + 1, (i ^ (1 << b)) + 1) for i in range(n))
        )
    return factors


def prism_factors(
    inner_edges: list[Edge],
    inner_vertices: list[int],
    inner_coloring: dict[Edge, int],
    num_colors: int,
    map1: dict[int, int],
    map2: dict[int, int],
) -> list[frozenset[Edge]]:
    """1-factorize a prism (two labeled copies of a regular graph plus verticals).

    inner_coloring is a proper edge coloring of the r-regular inner graph with
    colors 0..num_colors-1 where num_colors = r+1, so every inner vertex misses
    exactly one color.  Factor i takes the color-i edges in both copies plus
    the vertical edge at every vertex whose missing color is i.
    """
    missing: dict[int, int] = {}
    for v in inner_vertices:
        seen = {inner_coloring[e] for e in inner_edges if v in e}
        gaps = set(range(num_colors)) - seen
        if len(gaps) != 1:
            raise ValueError("inner coloring must leave exactly one gap per vertex")
        missing[v] = gaps.pop()
    factors = []
    for i in range(num_colors):
        part = set()
        for e, c in inner_coloring.items():
            if c == i:
                u, v = e
                part.add(norm_edge(map1[u], map1[v]))
                part.add(norm_edge(map2[u], map2[v]))
        for v in inner_vertices:
            if missing[v] == i:
                part.add(norm_edge(map1[v], map2[v]))
        factors.append(frozenset(part))
    return factors


def _recognize_prism(G: Graph) -> tuple[list[int], dict[int, int], dict[int, int]] | None:
    """Detect the two labelings our cartesian builder gives to G' x K2.

    Returns (inner vertex list, copy-1 map, copy-2 map) on success.  Pattern a
    pairs (v, v + n/2); pattern b pairs (2v-1, 2v).
    """
    n = G.vertex_count
    if n % 2:
        return None
    half = n // 2
    for pairing in ("halves", "interleaved"):
        if pairing == "halves":
            map1 = {v: v for v in range(1, half + 1)}
            map2 = {v: v + half for v in range(1, half + 1)}
        else:
            map1 = {v: 2 * v - 1 for v in range(1, half + 1)}
            map2 = {v: 2 * v for v in range(1, half + 1)}
        inv1 = {a: v for v, a in map1.items()}
        inv2 = {a: v for v, a in map2.items()}
        inner1, inner2, verticals, ok = set(), set(), set(), True
        for u, v in G.edges:
            if u in inv1 and v in inv1:
                inner1.add(norm_edge(inv1[u], inv1[v]))
            elif u in inv2 and v in inv2:
                inner2.add(norm_edge(inv2[u], inv2[v]))
            elif u in inv1 and v in inv2 and inv1[u] == inv2[v]:
                verticals.add(inv1[u])
            elif u in inv2 and v in inv1 and inv2[u] == inv1[v]:
                verticals.add(inv2[u])
            else:
                ok = False
                break
        if ok and inner1 == inner2 and verticals == set(range(1, half + 1)):
            return list(range(1, half + 1)), map1, map2
    return None


def one_factorization(
    G: Graph, budget: int | None = None
) -> OneFactorization | None:
    """1-factorize a regular graph, or None when no 1-factorization exists.

    Recognized families get closed-form factorizations (complete graphs by the
    circle method, balanced complete bipartite graphs by shifts, hypercubes by
    dimension matchings, prisms by the missing-color construction); everything
    else falls back to an exact backtracking edge coloring with r colors.
    """
    r = G.is_regular()
    if r is None:
        raise NotRegular("1-factorization needs a regular graph")
    n = G.vertex_count
    if r == 0:
        return OneFactorization(G, ())
    if n % 2:
        return None
    factors: list[frozenset[Edge]] | None = None
    if len(G.edges) == n * (n - 1) // 2:
        factors = _round_robin_factors(n)
    elif n == (1 << max(1, n.bit_length() - 1)) and _is_hypercube_labeled(G):
        factors = _hypercube_factors(r)
    elif _is_balanced_complete_bipartite(G):
        factors = _shift_factors(n // 2)
    else:
        prism = _recognize_prism(G)
        if prism is not None:
            inner_vertices, map1, map2 = prism
            inner_edges = sorted(
                norm_edge(iv1, iv2)
                for iv1 in inner_vertices
                for iv2 in inner_vertices
                if iv1 < iv2 and G.has_edge(map1[iv1], map1[iv2])
            )
            inner = Graph(len(inner_vertices), tuple(inner_edges))
            from .coloring import find_proper_coloring

            coloring = find_proper_coloring(inner, r, budget=budget)
            if coloring is not None:
                cmap = {e: coloring.color_of(e) - 1 for e in inner.edges}
                factors = prism_factors(
                    list(inner.edges), inner_vertices, cmap, r, map1, map2
                )
    if factors is None:
        factors = _backtracking_factors(G, r, budget)
        if factors is None:
            return None
    fact = OneFactorization(G, tuple(factors))
    fact.validate()
    return fact


def _is_hypercube_labeled(G: Graph) -> bool:
    n = G.vertex_count
    d = n.bit_length() - 1
    if 1 << d != n:
        return False
    want = {
        norm_edge(i + 1, (i ^ (1 << b)) + 1)
        for i in range(n)
        for b in range(d)
    }
    return set(G.edges) == want


def _is_balanced_complete_bipartite(G: Graph) -> bool:
    half = G.vertex_count // 2
    want = {(i, half + j) for i in range(1, half + 1) for j in range(1, half + 1)}
    return set(G.edges) == want


def _backtracking_factors(
    G: Graph, r: int, budget: int | None
) -> list[frozenset[Edge]] | None:
    """Exact r-edge-coloring by backtracking; color classes are the factors.

    Color symmetry is broken by fixing the first edge to color 1 and only
    introducing new colors in increasing order.  Intended for graphs with at
    most a few dozen edges.
    """
    from .coloring import find_proper_coloring

    coloring = find_proper_coloring(G, r, budget=budget)
    if coloring is None:
        return None
    classes: dict[int, set[Edge]] = {}
    for e in G.edges:
        classes.setdefault(coloring.color_of(e), set()).add(e)
    return [frozenset(classes[c]) for c in sorted(classes)]
