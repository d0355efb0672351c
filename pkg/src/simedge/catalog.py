"""Named instances used throughout the test corpus and the repro runner."""
from __future__ import annotations

from .graph import Graph, circulant
from .trades import LatinTrade, PartialLatinSquare


def se_gap_graph() -> Graph:
    """The 8-vertex bipartite graph whose 2-simultaneous chromatic number (4)
    exceeds its chromatic index (3).  X = 1..4, Y = 5..8."""
    edges = (
        (1, 5), (1, 6),
        (2, 5), (2, 6), (2, 7),
        (3, 6), (3, 7), (3, 8),
        (4, 5), (4, 8),
    )
    return Graph(
        8,
        edges,
        bipartition=(frozenset({1, 2, 3, 4}), frozenset({5, 6, 7, 8})),
    )


def se_gap_bitrade() -> LatinTrade:
    """The volume-10 bitrade whose bipartite graph is se_gap_graph."""
    cells1 = (
        (1, 1, 1), (1, 2, 2),
        (2, 1, 2), (2, 2, 4), (2, 3, 3),
        (3, 2, 1), (3, 3, 4), (3, 4, 3),
        (4, 1, 3), (4, 4, 1),
    )
    cells2 = (
        (1, 1, 2), (1, 2, 1),
        (2, 1, 3), (2, 2, 2), (2, 3, 4),
        (3, 2, 4), (3, 3, 3), (3, 4, 1),
        (4, 1, 1), (4, 4, 3),
    )
    return LatinTrade(
        2,
        (PartialLatinSquare(4, 4, cells1), PartialLatinSquare(4, 4, cells2)),
    )


def non_three_se_graph() -> Graph:
    """K_{4,4} minus the matching x_i y_i plus the edge x_4 y_4: the
    3-edge-connected bipartite graph with degrees (3,3,3,4; 3,3,3,4) that has
    no 3-simultaneous edge coloring."""
    edges = tuple(
        (i, 4 + j) for i in range(1, 5) for j in range(1, 5) if i != j
    ) + ((4, 8),)
    return Graph(
        8,
        edges,
        bipartition=(frozenset({1, 2, 3, 4}), frozenset({5, 6, 7, 8})),
    )


def heawood() -> Graph:
    """Heawood graph: bipartite, cubic, girth 6 (point-line incidences of the
    Fano plane, as the (1,5)-circulant-style standard construction)."""
    edges = [(i, i % 14 + 1) for i in range(1, 15)]
    chords = [(1, 6), (3, 8), (5, 10), (7, 12), (9, 14), (11, 2), (13, 4)]
    all_edges = {tuple(sorted(e)) for e in edges + chords}
    return Graph(14, tuple(all_edges))


def even_circulant_with_chords() -> tuple[Graph, list[int]]:
    """The 4-regular circulant C8(1, 2) together with its Hamiltonian rim.

    Removing the rim leaves the two even 4-circuits on the odd and even
    vertices: a 2-regular bipartite residual with an oriented double cover.
    """
    G = circulant(8, (1, 2))
    return G, list(range(1, 9))
