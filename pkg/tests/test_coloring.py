import pytest
from hypothesis import given, settings

from simedge.catalog import se_gap_graph
from simedge.coloring import (
    EdgeColoring,
    SimultaneousColoring,
    check_girth_bound,
    chromatic_index,
    counterexample_filter,
    decide_mu_se,
    se_chromatic_number,
    verify_proper,
    verify_simultaneous,
)
from simedge.constructions import color_complete_bipartite, complete_odd_table
from simedge.errors import PreconditionViolated, SearchBudgetExceeded
from simedge.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    petersen,
    subdivide_edge,
    wheel,
)

from conftest import small_graphs


def sc_from_pairs(G, num_colors, pairs):
    """Build a 2-coordinate coloring from {edge: (c1, c2)}."""
    cols = [tuple(pairs[e][i] for e in G.edges) for i in range(2)]
    return SimultaneousColoring(
        G, 2, num_colors, tuple(EdgeColoring(G, num_colors, c) for c in cols)
    )


class TestVerifyProper:
    def test_alternating_circuit(self):
        C4 = cycle_graph(4)
        c = EdgeColoring(C4, 2, tuple(1 if e in {(1, 2), (3, 4)} else 2 for e in C4.edges))
        assert verify_proper(c)

    def test_clash_at_shared_vertex(self):
        C3 = cycle_graph(3)
        c = EdgeColoring(C3, 2, (1, 1, 2))
        res = verify_proper(c)
        assert not res
        assert "vertex" in res.reason

    def test_complete7_table_first_coordinate(self):
        sc = complete_odd_table(7)
        assert verify_proper(sc.colorings[0])


class TestVerifySimultaneous:
    def test_k22_swap(self):
        G = complete_bipartite(2, 2)
        pairs = {
            (1, 3): (1, 2),
            (1, 4): (2, 1),
            (2, 3): (2, 1),
            (2, 4): (1, 2),
        }
        assert verify_simultaneous(sc_from_pairs(G, 2, pairs))

    def test_identical_coordinates_fail(self):
        G = complete_bipartite(2, 2)
        pairs = {e: (1 if e in {(1, 3), (2, 4)} else 2,) * 2 for e in G.edges}
        res = verify_simultaneous(sc_from_pairs(G, 2, pairs))
        assert not res
        assert "repeats a color" in res.reason

    def test_palette_mismatch_reported(self):
        G = cycle_graph(4)
        pairs = {
            (1, 2): (1, 2),
            (2, 3): (2, 3),
            (3, 4): (1, 2),
            (1, 4): (2, 1),
        }
        res = verify_simultaneous(sc_from_pairs(G, 3, pairs))
        assert not res

    def test_complete_tables(self):
        for n in (7, 9):
            sc = complete_odd_table(n)
            assert sc.num_colors == n
            assert verify_simultaneous(sc)


class TestChromaticIndex:
    def test_gap_graph(self):
        assert chromatic_index(se_gap_graph()) == 3

    def test_k5(self):
        assert chromatic_index(complete_graph(5)) == 5

    def test_petersen_is_class_two(self):
        assert chromatic_index(petersen()) == 4

    def test_edgeless(self):
        assert chromatic_index(Graph(3, ())) == 0

    def test_budget_raises(self):
        with pytest.raises(SearchBudgetExceeded):
            chromatic_index(petersen(), budget=5)


class TestDecide:
    def test_gap_graph_negative_then_positive(self, gap_graph):
        assert decide_mu_se(gap_graph, 2, 3) is None
        sc = decide_mu_se(gap_graph, 2, 4)
        assert sc is not None and verify_simultaneous(sc)

    def test_c4(self):
        assert decide_mu_se(cycle_graph(4), 2, 2) is not None

    @pytest.mark.parametrize("l", [4, 5, 6])
    def test_k5_negative(self, l):
        assert decide_mu_se(complete_graph(5), 2, l) is None

    def test_mu_above_min_degree(self):
        assert decide_mu_se(cycle_graph(4), 3, 5) is None

    def test_edgeless_trivial(self):
        sc = decide_mu_se(Graph(2, ()), 2, 1)
        assert sc is not None and verify_simultaneous(sc)

    @given(small_graphs())
    @settings(max_examples=30, deadline=None)
    def test_found_colorings_always_verify(self, G):
        sc = decide_mu_se(G, 2, max(G.max_degree(), 2))
        if sc is not None:
            assert verify_simultaneous(sc)
            # dropping a coordinate keeps everything valid
            assert verify_simultaneous(sc.drop_coordinates(1))


class TestSeChromaticNumber:
    def test_gap_graph(self, gap_graph):
        assert se_chromatic_number(gap_graph, 2, 6) == 4

    def test_k33(self):
        assert se_chromatic_number(complete_bipartite(3, 3), 3, 5) == 3

    def test_w5(self):
        assert se_chromatic_number(wheel(5), 2, 5) == 5

    def test_none_up_to_lmax(self):
        assert se_chromatic_number(complete_graph(5), 2, 7) is None

    def test_lmax_below_delta(self):
        with pytest.raises(PreconditionViolated):
            se_chromatic_number(complete_graph(4), 2, 2)

    @given(small_graphs())
    @settings(max_examples=20, deadline=None)
    def test_mu_one_equals_chromatic_index(self, G):
        chi = chromatic_index(G)
        assert se_chromatic_number(G, 1, max(chi, 1)) == chi


class TestCounterexampleFilter:
    def test_c4_fails_degree(self):
        res = counterexample_filter(cycle_graph(4))
        assert not res
        assert any("maximum degree" in f for f in res.failures)

    def test_k33_fails_min_degree(self):
        res = counterexample_filter(complete_bipartite(3, 3))
        assert not res
        assert any("minimum degree" in f for f in res.failures)

    def test_k33_subdivided_twice(self):
        G = subdivide_edge(complete_bipartite(3, 3), (1, 4), 2)
        res = counterexample_filter(G)
        # the subdivision vertices hang on a 2-edge cut, so (iii) and (iv) fail
        assert not res
        assert any("2-edge-cut" in f for f in res.failures)
        assert any("leaves a bridge" in f for f in res.failures)

    def test_not_bipartite_reported(self):
        res = counterexample_filter(wheel(4))
        assert any("bipartite" in f for f in res.failures)


class TestGirthBound:
    def test_c6_equality(self):
        C6 = cycle_graph(6)
        sc = decide_mu_se(C6, 2, 2)
        assert check_girth_bound(C6, sc, 3) is True

    def test_k33(self):
        sc = color_complete_bipartite(3, 3, 2)
        assert check_girth_bound(complete_bipartite(3, 3), sc, 2) is True

    def test_girth_precondition(self):
        C4 = cycle_graph(4)
        sc = decide_mu_se(C4, 2, 2)
        with pytest.raises(PreconditionViolated):
            check_girth_bound(C4, sc, 3)  # girth 4 < 2*3 - 1

    def test_bridge_precondition(self):
        G = Graph(2, ((1, 2),))
        sc = decide_mu_se(G, 1, 1)
        sc2 = SimultaneousColoring(G, 2, 2, (sc.colorings[0],) * 2)
        with pytest.raises(Exception):
            check_girth_bound(G, sc2, 2)
