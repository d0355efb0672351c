"""Partial Latin squares, mu-way Latin trades, and the coloring translation.

A mu-way trade is mu partial Latin squares on one shape whose filled cells
disagree pairwise and whose rows (and columns) carry identical symbol sets
across the squares.  Its bipartite graph (rows x columns, one edge per filled
cell, entries as colors) is mu-simultaneously colored, and conversely.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .coloring import (
    CheckResult,
    EdgeColoring,
    SimultaneousColoring,
    decide_mu_se,
    verify_simultaneous,
)
from .errors import InvalidTrade, NotBipartite, NotSymmetric
from .graph import Edge, Graph, is_bipartite


@dataclass(frozen=True)
class PartialLatinSquare:
    """Cells (row, col, symbol) inside an n x m frame, at most one per position.

    Latin-ness (no symbol twice in a row or column) is checked by
    verify_trade, not assumed at construction.
    """

    rows: int
    cols: int
    cells: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(sorted(self.cells)))
        positions = set()
        for r, c, s in self.cells:
            if not (1 <= r <= self.rows and 1 <= c <= self.cols):
                raise ValueError(f"cell ({r},{c}) outside the {self.rows}x{self.cols} frame")
            if s < 1:
                raise ValueError("symbols must be positive integers")
            if (r, c) in positions:
                raise ValueError(f"position ({r},{c}) filled twice")
            positions.add((r, c))

    @property
    def shape(self) -> frozenset[tuple[int, int]]:
        return frozenset((r, c) for r, c, _ in self.cells)

    @property
    def volume(self) -> int:
        return len(self.cells)

    def entry(self, r: int, c: int) -> int | None:
        for rr, cc, s in self.cells:
            if (rr, cc) == (r, c):
                return s
        return None

    def row_symbols(self, r: int) -> frozenset[int]:
        return frozenset(s for rr, _, s in self.cells if rr == r)

    def col_symbols(self, c: int) -> frozenset[int]:
        return frozenset(s for _, cc, s in self.cells if cc == c)

    def is_latin(self) -> bool:
        rows_seen: dict[tuple[int, int], bool] = {}
        for r, c, s in self.cells:
            if (r, s) in rows_seen:
                return False
            rows_seen[(r, s)] = True
        cols_seen: dict[tuple[int, int], bool] = {}
        for r, c, s in self.cells:
            if (c, s) in cols_seen:
                return False
            cols_seen[(c, s)] = True
        return True


@dataclass(frozen=True)
class LatinTrade:
    mu: int
    squares: tuple[PartialLatinSquare, ...]
    symmetric: bool = False

    def __post_init__(self):
        if len(self.squares) != self.mu:
            raise ValueError("exactly mu squares required")

    @property
    def volume(self) -> int:
        return self.squares[0].volume if self.squares else 0


def verify_trade(T: LatinTrade) -> CheckResult:
    """Check the full trade definition and report the first broken clause."""
    fails = []
    if T.mu < 2:
        fails.append("a trade needs mu >= 2")
    shapes = {sq.shape for sq in T.squares}
    if len(shapes) != 1:
        return CheckResult(False, ("squares do not share one shape",))
    for t, sq in enumerate(T.squares, start=1):
        if not sq.is_latin():
            fails.append(f"square {t} repeats a symbol in a row or column")
    shape = T.squares[0].shape
    for r, c in sorted(shape):
        entries = [sq.entry(r, c) for sq in T.squares]
        if len(set(entries)) != len(entries):
            fails.append(f"cell ({r},{c}) repeats an entry across squares: {entries}")
            break
    rows = {r for r, _ in shape}
    cols = {c for _, c in shape}
    base = T.squares[0]
    for sq_i, sq in enumerate(T.squares[1:], start=2):
        for r in sorted(rows):
            if sq.row_symbols(r) != base.row_symbols(r):
                fails.append(f"row {r} symbol sets differ between squares 1 and {sq_i}")
                break
        for c in sorted(cols):
            if sq.col_symbols(c) != base.col_symbols(c):
                fails.append(f"column {c} symbol sets differ between squares 1 and {sq_i}")
                break
    if T.symmetric:
        for sq_i, sq in enumerate(T.squares, start=1):
            cellset = set(sq.cells)
            for r, c, s in sq.cells:
                if r == c:
                    fails.append(f"square {sq_i} fills diagonal cell ({r},{r})")
                    break
                if (c, r, s) not in cellset:
                    fails.append(f"square {sq_i} is not symmetric at ({r},{c})")
                    break
    return CheckResult(not fails, tuple(fails))


# ---------------------------------------------------------------------------
# translation to and from colorings
# ---------------------------------------------------------------------------

def trade_to_graph(
    T: LatinTrade, symmetric: bool = False
) -> tuple[Graph, SimultaneousColoring]:
    """Build the (bipartite) graph of a trade together with its coloring.

    Bipartite case: X = used rows (ascending), Y = used columns; edge per
    filled cell, colored per square.  Symmetric case: one vertex per used
    index, one edge per unordered filled pair.  Unused rows and columns are
    trimmed.
    """
    res = verify_trade(T)
    if not res:
        raise InvalidTrade(res.reason)
    if symmetric and not T.symmetric:
        raise NotSymmetric("trade is not flagged symmetric")
    shape = sorted(T.squares[0].shape)
    num_colors = max((s for sq in T.squares for _, _, s in sq.cells), default=1)
    if symmetric:
        used = sorted({i for rc in shape for i in rc})
        index = {v: i + 1 for i, v in enumerate(used)}
        tuples: dict[Edge, tuple[int, ...]] = {}
        for r, c in shape:
            if r < c:
                e = (index[r], index[c])
                tuples[e] = tuple(sq.entry(r, c) for sq in T.squares)
        G = Graph(len(used), tuple(tuples))
    else:
        used_rows = sorted({r for r, _ in shape})
        used_cols = sorted({c for _, c in shape})
        ri = {r: i + 1 for i, r in enumerate(used_rows)}
        ci = {c: len(used_rows) + j + 1 for j, c in enumerate(used_cols)}
        tuples = {}
        for r, c in shape:
            tuples[(ri[r], ci[c])] = tuple(sq.entry(r, c) for sq in T.squares)
        G = Graph(
            len(used_rows) + len(used_cols),
            tuple(tuples),
            bipartition=(
                frozenset(ri.values()),
                frozenset(ci.values()),
            ),
        )
    colorings = tuple(
        EdgeColoring(G, num_colors, tuple(tuples[e][t] for e in G.edges))
        for t in range(T.mu)
    )
    sc = SimultaneousColoring(G, T.mu, num_colors, colorings)
    out = verify_simultaneous(sc)
    assert out, out.reason
    return G, sc


def coloring_to_trade(
    G: Graph, sc: SimultaneousColoring, symmetric: bool = False
) -> LatinTrade:
    """Inverse translation; rows/columns follow ascending vertex order."""
    if symmetric:
        n = G.vertex_count
        squares = []
        for t in range(sc.mu):
            cells = []
            for e in G.edges:
                s = sc.tuple_of(e)[t]
                cells.append((e[0], e[1], s))
                cells.append((e[1], e[0], s))
            squares.append(PartialLatinSquare(n, n, tuple(cells)))
        return LatinTrade(sc.mu, tuple(squares), symmetric=True)
    sides = G.bipartition or is_bipartite(G)
    if sides is None:
        raise NotBipartite("bipartite translation needs a bipartite graph")
    xs, ys = sorted(sides[0]), sorted(sides[1])
    ri = {v: i + 1 for i, v in enumerate(xs)}
    ci = {v: j + 1 for j, v in enumerate(ys)}
    squares = []
    for t in range(sc.mu):
        cells = []
        for u, v in G.edges:
            x, y = (u, v) if u in ri else (v, u)
            cells.append((ri[x], ci[y], sc.tuple_of((u, v))[t]))
        squares.append(PartialLatinSquare(len(xs), len(ys), tuple(cells)))
    return LatinTrade(sc.mu, tuple(squares), symmetric=False)


# ---------------------------------------------------------------------------
# volume spectrum scanning
# ---------------------------------------------------------------------------

def _canonical_bipartite(row_masks: tuple[int, ...], n_cols: int) -> tuple[int, ...]:
    """Canonical key under row and column permutations.

    Rows are free (we sort them); columns only permute within equal-degree
    classes, which preserves the sorted column degree vector and is enough
    for isomorph rejection.
    """
    col_deg = [0] * n_cols
    for mask in row_masks:
        for j in range(n_cols):
            if mask >> j & 1:
                col_deg[j] += 1
    classes: dict[int, list[int]] = {}
    for j, d in enumerate(col_deg):
        classes.setdefault(d, []).append(j)
    ordered_degrees = sorted(classes)
    best = None
    def perms_by_class():
        groups = [classes[d] for d in ordered_degrees]
        def rec(i, acc):
            if i == len(groups):
                yield acc
                return
            for p in permutations(groups[i]):
                yield from rec(i + 1, acc + list(p))
        yield from rec(0, [])
    for perm in perms_by_class():
        remapped = []
        for mask in row_masks:
            nm = 0
            for newpos, oldcol in enumerate(perm):
                if mask >> oldcol & 1:
                    nm |= 1 << newpos
            remapped.append(nm)
        key = tuple(sorted(remapped))
        if best is None or key < best:
            best = key
    return best


def _candidate_bipartite_graphs(volume: int, mu: int):
    """Bipartite graphs with `volume` edges and min degree >= mu, one per
    canonical class.  Row masks are generated in non-decreasing order so row
    permutations never produce duplicates."""
    seen: set[tuple[int, tuple[int, ...]]] = set()
    max_rows = volume // mu
    for n_rows in range(1, max_rows + 1):
        for n_cols in range(1, max_rows + 1):
            if n_rows * n_cols < volume:
                continue
            row_choices = [
                mask
                for mask in range(1 << n_cols)
                if mask.bit_count() >= mu
            ]

            def rec(rows: list[int], remaining: int, start: int):
                if len(rows) == n_rows:
                    if remaining != 0:
                        return
                    col_deg = [0] * n_cols
                    for mask in rows:
                        for j in range(n_cols):
                            if mask >> j & 1:
                                col_deg[j] += 1
                    if min(col_deg) < mu:
                        return
                    key = (n_cols, _canonical_bipartite(tuple(rows), n_cols))
                    if key not in seen:
                        seen.add(key)
                        yield tuple(rows)
                    return
                slots_left = n_rows - len(rows)
                for idx in range(start, len(row_choices)):
                    mask = row_choices[idx]
                    w = mask.bit_count()
                    if w > remaining - mu * (slots_left - 1):
                        continue
                    yield from rec(rows + [mask], remaining - w, idx)

            for rows in rec([], volume, 0):
                edges = []
                for i, mask in enumerate(rows):
                    for j in range(n_cols):
                        if mask >> j & 1:
                            edges.append((i + 1, n_rows + j + 1))
                yield Graph(
                    n_rows + n_cols,
                    tuple(edges),
                    bipartition=(
                        frozenset(range(1, n_rows + 1)),
                        frozenset(range(n_rows + 1, n_rows + n_cols + 1)),
                    ),
                )


def spectrum_scan(
    mu: int, s_max: int, budget: int | None = None
) -> set[int]:
    """Feasible trade volumes up to s_max, by exhaustive graph search.

    A mu-way trade of volume s is exactly a mu-simultaneously colorable
    bipartite graph with s edges (and so minimum degree >= mu); feasibility
    of each volume is decided by running the complete coloring search over
    all candidate graphs up to isomorphism, with s colors (relabeling makes
    more colors never necessary).
    """
    feasible: set[int] = set()
    for s in range(1, s_max + 1):
        for G in _candidate_bipartite_graphs(s, mu):
            if decide_mu_se(G, mu, s, budget=budget) is not None:
                feasible.add(s)
                break
    return feasible
