"""Cycle double covers (plain and oriented) and nowhere-zero flows.

The bridge between colorings and covers: a 2-simultaneous coloring turns each
color class f1^j + f2^j into a disjoint union of even circuits, and back; for
bipartite graphs the same classes orient into a cover traversing every edge
once in each direction.

Circuits are stored as vertex tuples; undirected circuits are canonicalized
(minimum vertex first, smaller neighbor second), directed circuits only up to
rotation so the orientation survives.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .budget import BudgetCounter
from .coloring import (
    CheckResult,
    EdgeColoring,
    SimultaneousColoring,
    chromatic_index,
    verify_simultaneous,
)
from .errors import (
    InvalidCover,
    LimitExceeded,
    NoOcdcFound,
    NotBipartite,
    NotEvenGraph,
    NotTwoSimultaneous,
    OddCircuit,
    TooFewClasses,
)
from .graph import Edge, Graph, is_bipartite, norm_edge

Circuit = tuple[int, ...]


# ---------------------------------------------------------------------------
# circuit utilities
# ---------------------------------------------------------------------------

def canonical_circuit(seq: Circuit) -> Circuit:
    """Rotate/reflect so the minimum vertex leads and its smaller neighbor follows."""
    k = len(seq)
    i = seq.index(min(seq))
    fwd = seq[i:] + seq[:i]
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, rev)


def canonical_directed(seq: Circuit) -> Circuit:
    """Rotate so the minimum vertex leads; direction is preserved."""
    i = seq.index(min(seq))
    return tuple(seq[i:] + seq[:i])


def circuit_edges(seq: Circuit) -> list[Edge]:
    return [norm_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1])]


def is_circuit_of(G: Graph, seq: Circuit) -> bool:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(G.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1]))


def enumerate_circuits(G: Graph, even_only: bool = False) -> list[Circuit]:
    """All simple circuits, each once, canonical and sorted.

    A circuit is rooted at its minimum vertex; paths only visit larger
    vertices, and the reflection is dropped by requiring the second vertex to
    be smaller than the last.
    """
    out: list[Circuit] = []
    for s in G.vertices():
        stack: list[int] = [s]
        on_path = {s}

        def dfs():
            v = stack[-1]
            for w in G.neighbors(v):
                if w == s and len(stack) >= 3 and stack[1] < stack[-1]:
                    if not even_only or len(stack) % 2 == 0:
                        out.append(tuple(stack))
                elif w > s and w not in on_path:
                    stack.append(w)
                    on_path.add(w)
                    dfs()
                    on_path.remove(w)
                    stack.pop()

        dfs()
    return sorted(canonical_circuit(c) for c in out)


def split_into_circuits(G: Graph, edges: set[Edge]) -> list[Circuit]:
    """Split an edge set whose vertices all have degree 0 or 2 into circuits."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v, ns in adj.items():
        if len(ns) != 2:
            raise ValueError(f"vertex {v} has degree {len(ns)} in the class")
    circuits = []
    unused = set(edges)
    while unused:
        u0, v0 = min(unused)
        walk = [u0, v0]
        unused.discard((u0, v0))
        while walk[-1] != walk[0]:
            v = walk[-1]
            nxt = [w for w in adj[v] if norm_edge(v, w) in unused]
            walk.append(nxt[0])
            unused.discard(norm_edge(v, nxt[0]))
        circuits.append(canonical_circuit(tuple(walk[:-1])))
    return circuits


# ---------------------------------------------------------------------------
# cover types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleDoubleCover:
    """Multiset of circuits covering every host edge exactly twice.

    classes optionally partitions the circuit indices; circuit_colorings
    optionally gives each circuit a proper 2-edge-coloring, stored as 1/2
    values aligned with the circuit's edge walk.
    """

    graph: Graph
    circuits: tuple[Circuit, ...]
    classes: tuple[tuple[int, ...], ...] | None = None
    circuit_colorings: tuple[tuple[int, ...], ...] | None = None

    def lengths(self) -> list[int]:
        return sorted((len(c) for c in self.circuits), reverse=True)

    def multiset_key(self) -> tuple[Circuit, ...]:
        return tuple(sorted(self.circuits))


@dataclass(frozen=True)
class OrientedCDC:
    """Multiset of directed circuits traversing every edge once per direction."""

    graph: Graph
    circuits: tuple[Circuit, ...]


@dataclass(frozen=True)
class IntegerFlow:
    """Orientation (tail, head) plus integer weight, aligned with graph.edges."""

    graph: Graph
    orientation: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def verify_cdc(G: Graph, cover: CycleDoubleCover) -> CheckResult:
    counts: dict[Edge, int] = {e: 0 for e in G.edges}
    for c in cover.circuits:
        if not is_circuit_of(G, c):
            return CheckResult(False, (f"{c} is not a circuit of the graph",))
        for e in circuit_edges(c):
            counts[e] += 1
    bad = [e for e, k in counts.items() if k != 2]
    if bad:
        return CheckResult(False, (f"edges not covered exactly twice: {bad[:5]}",))
    if cover.classes is not None:
        flat = sorted(i for cls in cover.classes for i in cls)
        if flat != list(range(len(cover.circuits))):
            return CheckResult(False, ("classes do not partition the circuits",))
        for cls in cover.classes:
            degree: dict[int, int] = {}
            union: set[Edge] = set()
            for i in cls:
                union |= set(circuit_edges(cover.circuits[i]))
            for u, v in union:
                degree[u] = degree.get(u, 0) + 1
                degree[v] = degree.get(v, 0) + 1
            if any(d not in (0, 2) for d in degree.values()):
                return CheckResult(
                    False, (f"class {cls} union is not 2-regular on its support",)
                )
    if cover.circuit_colorings is not None:
        if len(cover.circuit_colorings) != len(cover.circuits):
            return CheckResult(False, ("one coloring per circuit required",))
        for c, colors in zip(cover.circuits, cover.circuit_colorings):
            if len(colors) != len(c) or any(x not in (1, 2) for x in colors):
                return CheckResult(False, (f"bad 2-coloring on circuit {c}",))
            for i in range(len(c)):
                if colors[i] == colors[(i + 1) % len(c)]:
                    return CheckResult(
                        False, (f"coloring of circuit {c} is not proper",)
                    )
    return CheckResult(True)


def check_se_cdc_properties(
    G: Graph, cover: CycleDoubleCover, budget: int | None = None
) -> CheckResult:
    """The three properties tying a cover to a 2-simultaneous coloring:
    even circuits, at least chi' support-2-regular classes, and per-edge
    disagreement of the two circuit colorings."""
    base = verify_cdc(G, cover)
    if not base:
        return base
    fails = []
    if any(len(c) % 2 for c in cover.circuits):
        fails.append("a circuit is odd")
    if cover.classes is None:
        fails.append("no class partition")
    elif len(cover.classes) < chromatic_index(G, budget=budget):
        fails.append("fewer classes than the chromatic index")
    if cover.circuit_colorings is None:
        fails.append("no circuit colorings")
    else:
        seen: dict[Edge, list[int]] = {}
        for c, colors in zip(cover.circuits, cover.circuit_colorings):
            for e, col in zip(circuit_edges(c), colors):
                seen.setdefault(e, []).append(col)
        for e, cols in seen.items():
            if sorted(cols) != [1, 2]:
                fails.append(f"edge {e} does not get both colors: {cols}")
                break
    return CheckResult(not fails, tuple(fails))


def verify_ocdc(G: Graph, cover: OrientedCDC) -> CheckResult:
    counts: dict[tuple[int, int], int] = {}
    for e in G.edges:
        counts[e] = 0
        counts[(e[1], e[0])] = 0
    for c in cover.circuits:
        if not is_circuit_of(G, c):
            return CheckResult(False, (f"{c} is not a circuit of the graph",))
        for a, b in zip(c, c[1:] + c[:1]):
            counts[(a, b)] += 1
    bad = [d for d, k in counts.items() if k != 1]
    if bad:
        return CheckResult(
            False, (f"directions not traversed exactly once: {bad[:5]}",)
        )
    return CheckResult(True)


# ---------------------------------------------------------------------------
# coloring <-> cover translations
# ---------------------------------------------------------------------------

def _color_classes(sc: SimultaneousColoring) -> list[tuple[int, set[Edge]]]:
    """Nonempty unions f1^j + f2^j, ascending by color j."""
    f1, f2 = sc.colorings
    out = []
    for j in range(1, sc.num_colors + 1):
        union = f1.color_class(j) | f2.color_class(j)
        if union:
            out.append((j, union))
    return out


def se_to_cdc(G: Graph, sc: SimultaneousColoring) -> CycleDoubleCover:
    """Turn a 2-simultaneous coloring into its even-circuit double cover.

    Class j holds the circuits of f1^j + f2^j; each circuit's 2-coloring
    records which coordinate colored each edge with j.
    """
    if sc.mu != 2:
        raise NotTwoSimultaneous("need exactly two coordinates")
    res = verify_simultaneous(sc)
    if not res:
        raise NotTwoSimultaneous(f"invalid coloring: {res.reason}")
    f1 = sc.colorings[0]
    circuits: list[Circuit] = []
    colorings: list[tuple[int, ...]] = []
    classes: list[tuple[int, ...]] = []
    for j, union in _color_classes(sc):
        members = split_into_circuits(G, union)
        idx = []
        for c in members:
            colors = tuple(
                1 if f1.color_of(e) == j else 2 for e in circuit_edges(c)
            )
            idx.append(len(circuits))
            circuits.append(c)
            colorings.append(colors)
        classes.append(tuple(idx))
    cover = CycleDoubleCover(
        G, tuple(circuits), tuple(classes), tuple(colorings)
    )
    assert check_se_cdc_properties(G, cover)
    return cover


def singleton_classes(k: int) -> tuple[tuple[int, ...], ...]:
    return tuple((i,) for i in range(k))


def cdc_to_se(
    G: Graph, cover: CycleDoubleCover, budget: int | None = None
) -> SimultaneousColoring | None:
    """Back direction: pick one of the two alternating colorings per circuit
    so the two circuits across every edge disagree; the classes become colors.

    The choice is a parity constraint system with one boolean per circuit;
    None means the system is unsatisfiable for the given partition (or an
    edge's two circuits share a class, which no choice can fix).
    """
    base = verify_cdc(G, cover)
    if not base:
        raise InvalidCover(base.reason)
    if any(len(c) % 2 for c in cover.circuits):
        raise OddCircuit("all circuits must be even")
    if cover.classes is None:
        raise TooFewClasses("a class partition is required")
    chi = chromatic_index(G, budget=budget)
    if len(cover.classes) < chi:
        raise TooFewClasses(
            f"{len(cover.classes)} classes but chromatic index {chi}"
        )
    class_of = {}
    for ci, cls in enumerate(cover.classes):
        for i in cls:
            class_of[i] = ci
    # which two circuit traversals cover each edge, with the base color
    # (1 on the circuit's first edge, alternating)
    covering: dict[Edge, list[tuple[int, int]]] = {e: [] for e in G.edges}
    for i, c in enumerate(cover.circuits):
        for pos, e in enumerate(circuit_edges(c)):
            covering[e].append((i, pos % 2))
    # parity system: flip[i] ^ flip[j] = b_i ^ b_j ^ 1 per edge
    k = len(cover.circuits)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for e, pair in covering.items():
        (i, bi), (j, bj) = pair
        if class_of[i] == class_of[j]:
            return None  # both covers of e in one class: colors cannot differ
        parity = bi ^ bj ^ 1
        adj[i].append((j, parity))
        adj[j].append((i, parity))
    flip = [-1] * k
    for s in range(k):
        if flip[s] != -1:
            continue
        flip[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w, parity in adj[v]:
                want = flip[v] ^ parity
                if flip[w] == -1:
                    flip[w] = want
                    stack.append(w)
                elif flip[w] != want:
                    return None  # parity inconsistency
    f = {e: [0, 0] for e in G.edges}
    for e, pair in covering.items():
        for i, b in pair:
            color_here = 1 + (b ^ flip[i])  # 1 or 2 after the flip
            f[e][color_here - 1] = class_of[i] + 1
    t = len(cover.classes)
    colorings = tuple(
        EdgeColoring(G, t, tuple(f[e][i] for e in G.edges)) for i in range(2)
    )
    sc = SimultaneousColoring(G, 2, t, colorings)
    assert verify_simultaneous(sc)
    return sc


def with_singleton_classes(cover: CycleDoubleCover) -> CycleDoubleCover:
    return CycleDoubleCover(
        cover.graph,
        cover.circuits,
        singleton_classes(len(cover.circuits)),
        cover.circuit_colorings,
    )


def se_to_ocdc_bipartite(G: Graph, sc: SimultaneousColoring) -> OrientedCDC:
    """Orient each class circuit so f1-edges run X to Y and f2-edges run back."""
    sides = G.bipartition or is_bipartite(G)
    if sides is None:
        raise NotBipartite("graph is not bipartite")
    X = set(sides[0])
    if sc.mu != 2:
        raise NotTwoSimultaneous("need exactly two coordinates")
    res = verify_simultaneous(sc)
    if not res:
        raise NotTwoSimultaneous(f"invalid coloring: {res.reason}")
    f1 = sc.colorings[0]
    directed: list[Circuit] = []
    for j, union in _color_classes(sc):
        for c in split_into_circuits(G, union):
            # walk direction: the first edge with f1 = j must leave X
            a, b = c[0], c[1]
            e0 = norm_edge(a, b)
            forward = (f1.color_of(e0) == j) == (a in X)
            seq = c if forward else (c[0],) + tuple(reversed(c[1:]))
            for p, q in zip(seq, seq[1:] + seq[:1]):
                expect_x_to_y = f1.color_of((p, q)) == j
                assert (p in X) == expect_x_to_y, "orientation rule broke"
            directed.append(canonical_directed(seq))
    cover = OrientedCDC(G, tuple(directed))
    assert verify_ocdc(G, cover)
    return cover


def ocdc_to_se_bipartite(G: Graph, cover: OrientedCDC) -> SimultaneousColoring:
    """Index the directed circuits; f1 takes the X-to-Y traversal's index,
    f2 the reverse traversal's."""
    sides = G.bipartition or is_bipartite(G)
    if sides is None:
        raise NotBipartite("graph is not bipartite")
    X = set(sides[0])
    res = verify_ocdc(G, cover)
    if not res:
        raise InvalidCover(res.reason)
    f1: dict[Edge, int] = {}
    f2: dict[Edge, int] = {}
    for idx, c in enumerate(cover.circuits, start=1):
        for p, q in zip(c, c[1:] + c[:1]):
            e = norm_edge(p, q)
            if p in X:
                f1[e] = idx
            else:
                f2[e] = idx
    t = len(cover.circuits)
    colorings = tuple(
        EdgeColoring(G, max(t, 1), tuple(fmap[e] for e in G.edges))
        for fmap in (f1, f2)
    )
    sc = SimultaneousColoring(G, 2, max(t, 1), colorings)
    out = verify_simultaneous(sc)
    assert out, out.reason
    return sc


# ---------------------------------------------------------------------------
# cover search
# ---------------------------------------------------------------------------

def _cover_multisets(G: Graph, circuits: list[Circuit], counter: BudgetCounter):
    """Yield index multisets (non-decreasing) covering every edge twice.

    Each circuit may appear at most twice; a branch dies when some deficient
    edge cannot be covered by any remaining circuit.
    """
    m = len(G.edges)
    eidx = G.edge_index
    masks = []
    for c in circuits:
        mask = 0
        for e in circuit_edges(c):
            mask |= 1 << eidx[e]
        masks.append(mask)
    k = len(circuits)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]
    full = (1 << m) - 1

    def rec2(i: int, c1: int, c2: int, chosen: tuple[int, ...]):
        counter.spend()
        if c2 == full:
            yield chosen
            return
        if i == k:
            return
        if (full & ~c2) & ~suffix[i]:
            return
        mask = masks[i]
        if not (mask & c2):
            n1 = c1 | mask
            n2 = c2 | (c1 & mask)
            yield from rec2(i + 1, n1, n2, chosen + (i,))
            if not (mask & n2):
                yield from rec2(i + 1, n1, n2 | mask, chosen + (i, i))
        yield from rec2(i + 1, c1, c2, chosen)

    yield from rec2(0, 0, 0, ())


def enumerate_even_cdcs(
    G: Graph,
    limit: int = 10_000,
    up_to_automorphism: bool = False,
    budget: int | None = None,
) -> list[CycleDoubleCover]:
    """All double covers by even circuits, as multisets; optionally one
    representative per orbit of the automorphism group."""
    counter = BudgetCounter(budget, label="enumerate_even_cdcs")
    circuits = enumerate_circuits(G, even_only=True)
    covers = []
    for chosen in _cover_multisets(G, circuits, counter):
        covers.append(
            CycleDoubleCover(G, tuple(sorted(circuits[i] for i in chosen)))
        )
        if len(covers) > limit:
            raise LimitExceeded(f"more than {limit} covers found")
    if up_to_automorphism and covers:
        auts = automorphisms(G)
        seen: set[tuple[Circuit, ...]] = set()
        unique = []
        for cov in covers:
            key = min(
                tuple(
                    sorted(
                        canonical_circuit(tuple(a[v] for v in c))
                        for c in cov.circuits
                    )
                )
                for a in auts
            )
            if key not in seen:
                seen.add(key)
                unique.append(cov)
        covers = unique
    return covers


def automorphisms(G: Graph) -> list[dict[int, int]]:
    """All adjacency-preserving vertex permutations, by backtracking with
    degree pruning.  Intended for small certificate graphs."""
    n = G.vertex_count
    deg = G.degrees
    adj = {v: set(G.neighbors(v)) for v in G.vertices()}
    out: list[dict[int, int]] = []
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def rec(v: int):
        if v > n:
            out.append(dict(mapping))
            return
        for w in G.vertices():
            if w in used or deg[w] != deg[v]:
                continue
            ok = True
            for u in adj[v]:
                if u < v and mapping[u] not in adj[w]:
                    ok = False
                    break
            if ok:
                for u in range(1, v):
                    if u not in adj[v] and mapping[u] in adj[w]:
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used.add(w)
                rec(v + 1)
                used.discard(w)
                del mapping[v]

    rec(1)
    return out


def even_circuit_decomposition(
    G: Graph, budget: int | None = None
) -> list[Circuit] | None:
    """Partition the edge set into even circuits, or None (exhaustive)."""
    if any(d % 2 for d in G.degrees.values()):
        raise NotEvenGraph("all degrees must be even")
    if not G.edges:
        return []
    counter = BudgetCounter(budget, label="even_circuit_decomposition")
    eidx = G.edge_index
    m = len(G.edges)
    full = (1 << m) - 1

    def circuits_through_first(remaining: int):
        """Even circuits through the lowest remaining edge, inside remaining."""
        first = (remaining & -remaining).bit_length() - 1
        u, v = G.edges[first]
        found: list[tuple[Circuit, int]] = []
        path = [v]
        pmask = 1 << first

        def dfs(at: int, mask: int, onpath: set[int]):
            counter.spend()
            for w, ei in G.adjacency[at]:
                bit = 1 << ei
                if not (remaining & bit) or (mask & bit):
                    continue
                if w == u:
                    if (len(path) + 1) % 2 == 0:
                        found.append(((u, *path), mask | bit))
                elif w not in onpath and w != v:
                    path.append(w)
                    onpath.add(w)
                    dfs(w, mask | bit, onpath)
                    onpath.discard(w)
                    path.pop()

        dfs(v, pmask, {u, v})
        return found

    def rec(remaining: int) -> list[Circuit] | None:
        if remaining == 0:
            return []
        counter.spend()
        for circ, mask in circuits_through_first(remaining):
            rest = rec(remaining & ~mask)
            if rest is not None:
                return [canonical_circuit(circ)] + rest
        return None

    return rec(full)


# ---------------------------------------------------------------------------
# nowhere-zero flows
# ---------------------------------------------------------------------------

def verify_nzf(G: Graph, flow: IntegerFlow, k: int) -> CheckResult:
    fails = []
    if len(flow.orientation) != len(G.edges) or len(flow.weights) != len(G.edges):
        return CheckResult(False, ("orientation/weights must align with edges",))
    balance = {v: 0 for v in G.vertices()}
    for e, (tail, head), w in zip(G.edges, flow.orientation, flow.weights):
        if norm_edge(tail, head) != e:
            return CheckResult(False, (f"orientation {tail}->{head} is not edge {e}",))
        if w == 0:
            fails.append(f"edge {e} has zero weight (support must be all edges)")
        if not (-k < w < k):
            fails.append(f"edge {e} weight {w} out of (-{k}, {k})")
        balance[tail] += w
        balance[head] -= w
    for v, b in balance.items():
        if b != 0:
            fails.append(f"conservation fails at vertex {v} (imbalance {b})")
    return CheckResult(not fails, tuple(fails[:5]))


def find_nzf(
    G: Graph, k: int, budget: int | None = None
) -> IntegerFlow | None:
    """Exhaustive k-flow search over the canonical (low -> high) orientation.

    Conservation propagation in the extreme: weights are free only on the
    co-tree edges of a spanning forest; tree-edge weights are forced by
    peeling degree-one vertices, so the search space is exactly
    (2k-2)^(co-tree size).
    """
    if k < 2:
        return None
    m = len(G.edges)
    if m == 0:
        return IntegerFlow(G, (), ())
    counter = BudgetCounter(budget, label="find_nzf")
    # spanning forest via BFS
    tree: set[int] = set()
    seen: set[int] = set()
    for root in G.vertices():
        if root in seen:
            continue
        seen.add(root)
        frontier = [root]
        while frontier:
            vv = frontier.pop()
            for w, ei in G.adjacency[vv]:
                if w not in seen:
                    seen.add(w)
                    tree.add(ei)
                    frontier.append(w)
    cotree = [i for i in range(m) if i not in tree]
    # peel order: repeatedly detach a leaf of the (remaining) forest
    tdeg = {v: 0 for v in G.vertices()}
    for i in tree:
        u, v = G.edges[i]
        tdeg[u] += 1
        tdeg[v] += 1
    peel: list[tuple[int, int]] = []  # (vertex, tree edge index)
    tleft = {
        v: [ei for _, ei in G.adjacency[v] if ei in tree] for v in G.vertices()
    }
    removed: set[int] = set()
    leaves = [v for v, d in tdeg.items() if d == 1]
    while leaves:
        v = leaves.pop()
        if tdeg[v] != 1:
            continue
        ei = next(i for i in tleft[v] if i not in removed)
        removed.add(ei)
        peel.append((v, ei))
        u = G.edges[ei][0] if G.edges[ei][1] == v else G.edges[ei][1]
        tdeg[u] -= 1
        tdeg[v] -= 1
        if tdeg[u] == 1:
            leaves.append(u)
    values = [w for w in range(-(k - 1), k) if w != 0]
    weights = [0] * m
    for combo in product(values, repeat=len(cotree)):
        counter.spend()
        balance = {v: 0 for v in G.vertices()}
        for i, w in zip(cotree, combo):
            weights[i] = w
            tail, head = G.edges[i]
            balance[tail] += w
            balance[head] -= w
        ok = True
        for v, ei in peel:
            tail, head = G.edges[ei]
            w = -balance[v] if v == tail else balance[v]
            if w == 0 or not (-k < w < k):
                ok = False
                break
            weights[ei] = w
            balance[tail] += w
            balance[head] -= w
        if ok and all(b == 0 for b in balance.values()):
            flow = IntegerFlow(G, tuple(G.edges), tuple(weights))
            assert verify_nzf(G, flow, k)
            return flow
    return None


def short_circuit_cover_check(G: Graph, length: int) -> bool:
    """True iff every edge lies on a circuit of length at most `length`."""
    from collections import deque

    for i, (u, v) in enumerate(G.edges):
        dist = {u: 0}
        queue = deque([u])
        found = False
        while queue:
            a = queue.popleft()
            if dist[a] + 1 > length - 1:
                break
            for b, ei in G.adjacency[a]:
                if ei == i or b in dist:
                    continue
                dist[b] = dist[a] + 1
                if b == v:
                    found = True
                    queue.clear()
                    break
                queue.append(b)
        if not found:
            return False
    return True


# ---------------------------------------------------------------------------
# oriented cover search
# ---------------------------------------------------------------------------

def _orient_cover(
    G: Graph, circuits: list[Circuit], chosen: tuple[int, ...]
) -> OrientedCDC | None:
    """Try to flip the chosen circuits so every edge is traversed both ways."""
    covering: dict[Edge, list[tuple[int, int]]] = {e: [] for e in G.edges}
    walks = [circuits[i] for i in chosen]
    for pos, c in enumerate(walks):
        for p, q in zip(c, c[1:] + c[:1]):
            e = norm_edge(p, q)
            covering[e].append((pos, 0 if (p, q) == e else 1))
    adj: list[list[tuple[int, int]]] = [[] for _ in walks]
    for e, pair in covering.items():
        (i, di), (j, dj) = pair
        parity = di ^ dj ^ 1
        adj[i].append((j, parity))
        adj[j].append((i, parity))
    flip = [-1] * len(walks)
    for s in range(len(walks)):
        if flip[s] != -1:
            continue
        flip[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y, parity in adj[x]:
                want = flip[x] ^ parity
                if flip[y] == -1:
                    flip[y] = want
                    stack.append(y)
                elif flip[y] != want:
                    return None
    directed = tuple(
        canonical_directed(
            c if not f else (c[0],) + tuple(reversed(c[1:]))
        )
        for c, f in zip(walks, flip)
    )
    cover = OrientedCDC(G, directed)
    return cover if verify_ocdc(G, cover) else None


def find_ocdc(G: Graph, budget: int | None = None) -> OrientedCDC:
    """Bounded exhaustive search for an oriented cycle double cover.

    Raises NoOcdcFound when the search space is exhausted (for bridgeless
    inputs this is a genuine nonexistence proof; a bridge makes any cover
    impossible outright and short-circuits here).
    """
    counter = BudgetCounter(budget, label="find_ocdc")
    from .graph import bridges as _bridges

    if _bridges(G):
        raise NoOcdcFound("graph has a bridge, so no cycle double cover exists")
    circuits = enumerate_circuits(G)
    for chosen in _cover_multisets(G, circuits, counter):
        cover = _orient_cover(G, circuits, chosen)
        if cover is not None:
            return cover
    raise NoOcdcFound("exhausted all circuit double covers without an orientation")
