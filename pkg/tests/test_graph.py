import math

import pytest
from hypothesis import given, settings

from simedge.errors import DisconnectedInput, EdgeNotFound, NotRegular
from simedge.graph import (
    Graph,
    bridges,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    edge_connectivity,
    girth,
    hypercube,
    is_bipartite,
    join,
    lexicographic_product,
    one_factorization,
    path_graph,
    petersen,
    subdivide_edge,
    wheel,
)
from simedge.catalog import non_three_se_graph
from simedge.smallgraphs import canonical_code

from conftest import small_graphs


def brute_force_min_cut(G):
    """Oracle: minimum crossing-edge count over all proper vertex subsets."""
    n = G.vertex_count
    best = math.inf
    for s in range(1 << (n - 1)):
        side = (s << 1) | 1
        if side == (1 << n) - 1:
            continue
        size = sum(
            1
            for u, v in G.edges
            if bool(side >> (u - 1) & 1) != bool(side >> (v - 1) & 1)
        )
        best = min(best, size)
    # subsets not containing vertex 1 are complements of counted ones
    return best


class TestBipartite:
    def test_even_circuit(self):
        assert is_bipartite(cycle_graph(4)) == ({1, 3}, {2, 4})

    def test_odd_circuit(self):
        assert is_bipartite(cycle_graph(3)) is None

    def test_petersen(self):
        assert is_bipartite(petersen()) is None


class TestBridges:
    def test_path(self):
        assert bridges(path_graph(3)) == {(1, 2), (2, 3)}

    @pytest.mark.parametrize("n", [3, 4, 7])
    def test_circuit(self, n):
        assert bridges(cycle_graph(n)) == set()

    def test_two_triangles_joined(self):
        G = Graph(6, ((1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)))
        assert bridges(G) == {(3, 4)}

    @given(small_graphs())
    @settings(max_examples=60, deadline=None)
    def test_against_component_count_oracle(self, G):
        expected = set()
        base = len(connected_components(G))
        for e in G.edges:
            H = Graph(G.vertex_count, tuple(f for f in G.edges if f != e))
            if len(connected_components(H)) > base:
                expected.add(e)
        assert bridges(G) == expected


class TestEdgeConnectivity:
    def test_circuit(self):
        assert edge_connectivity(cycle_graph(4))[0] == 2

    def test_complete(self):
        assert edge_connectivity(complete_graph(4))[0] == 3

    def test_three_connected_bipartite_example(self):
        kappa, cut = edge_connectivity(non_three_se_graph())
        assert kappa == 3
        assert cut.size == 3

    def test_disconnected(self):
        G = Graph(4, ((1, 2), (3, 4)))
        with pytest.raises(DisconnectedInput):
            edge_connectivity(G)

    def test_witness_is_a_cut(self):
        G = petersen()
        kappa, cut = edge_connectivity(G)
        assert kappa == 3
        H = Graph(10, tuple(e for e in G.edges if e not in cut.cut_edges))
        assert len(connected_components(H)) == 2

    @given(small_graphs())
    @settings(max_examples=40, deadline=None)
    def test_against_subset_oracle(self, G):
        if len(connected_components(G)) != 1 or G.vertex_count < 2:
            return
        kappa, cut = edge_connectivity(G)
        assert kappa == brute_force_min_cut(G)
        assert cut.size == kappa


class TestGirth:
    @pytest.mark.parametrize(
        "G,expected",
        [
            (complete_graph(4), 3),
            (petersen(), 5),
            (complete_bipartite(3, 3), 4),
            (path_graph(5), math.inf),
            (hypercube(3), 4),
        ],
    )
    def test_known(self, G, expected):
        assert girth(G) == expected

    @given(small_graphs())
    @settings(max_examples=40, deadline=None)
    def test_against_circuit_enumeration(self, G):
        from simedge.cdcflow import enumerate_circuits

        circuits = enumerate_circuits(G)
        expected = min((len(c) for c in circuits), default=math.inf)
        assert girth(G) == expected


class TestBuildersAndOperations:
    def test_join_k1_k1(self):
        assert join(Graph(1, ()), Graph(1, ())).edges == ((1, 2),)

    def test_join_c4_k1_is_wheel(self):
        J = join(cycle_graph(4), Graph(1, ()))
        W = wheel(4)
        assert canonical_code(5, J.edges) == canonical_code(5, W.edges)

    def test_join_complete(self):
        J = join(complete_graph(7), complete_graph(4))
        assert J.edges == complete_graph(11).edges

    def test_join_edge_count(self):
        G1, G2 = cycle_graph(5), complete_graph(3)
        J = join(G1, G2)
        assert len(J.edges) == len(G1.edges) + len(G2.edges) + 5 * 3

    def test_cartesian_k2_k2(self):
        P = cartesian_product(complete_graph(2), complete_graph(2))
        assert canonical_code(4, P.edges) == canonical_code(4, cycle_graph(4).edges)

    def test_cartesian_counts(self):
        P = cartesian_product(cycle_graph(4), cycle_graph(3))
        assert P.vertex_count == 12
        assert len(P.edges) == 24
        assert P.is_regular() == 4
        Q = cartesian_product(complete_graph(2), petersen())
        assert Q.vertex_count == 20
        assert Q.is_regular() == 4

    def test_cartesian_commutes_on_degrees(self):
        A, B = cycle_graph(5), path_graph(3)
        d1 = sorted(cartesian_product(A, B).degrees.values())
        d2 = sorted(cartesian_product(B, A).degrees.values())
        assert d1 == d2

    def test_lexicographic_small(self):
        assert lexicographic_product(complete_graph(2), Graph(1, ())).edges == ((1, 2),)
        L = lexicographic_product(complete_graph(2), complete_graph(2))
        assert L.edges == complete_graph(4).edges

    def test_lexicographic_c3_empty2(self):
        L = lexicographic_product(cycle_graph(3), Graph(2, ()))
        assert L.vertex_count == 6
        assert len(L.edges) == 12
        assert L.is_regular() == 4  # K_{2,2,2}

    def test_subdivide_c3(self):
        H = subdivide_edge(cycle_graph(3), (1, 2), 1)
        assert canonical_code(4, H.edges) == canonical_code(4, cycle_graph(4).edges)

    def test_subdivide_k4(self):
        H = subdivide_edge(complete_graph(4), (1, 2), 2)
        assert H.vertex_count == 6
        assert len(H.edges) == 8

    def test_subdivide_identity(self):
        G = complete_graph(4)
        assert subdivide_edge(G, (1, 2), 0) == G

    def test_subdivide_missing_edge(self):
        with pytest.raises(EdgeNotFound):
            subdivide_edge(cycle_graph(4), (1, 3), 1)


class TestOneFactorization:
    def test_k4(self):
        fact = one_factorization(complete_graph(4))
        assert len(fact.factors) == 3
        assert all(len(f) == 2 for f in fact.factors)

    def test_k33_shifts(self):
        fact = one_factorization(complete_bipartite(3, 3))
        assert len(fact.factors) == 3
        fact.validate()

    def test_hypercube(self):
        fact = one_factorization(hypercube(3))
        assert len(fact.factors) == 3
        fact.validate()

    def test_prism(self):
        P = cartesian_product(cycle_graph(3), complete_graph(2))
        fact = one_factorization(P)
        assert len(fact.factors) == 3
        fact.validate()

    def test_petersen_has_none(self):
        assert one_factorization(petersen()) is None

    def test_odd_order(self):
        assert one_factorization(cycle_graph(5)) is None

    def test_not_regular(self):
        with pytest.raises(NotRegular):
            one_factorization(path_graph(3))


class TestInvariants:
    @given(small_graphs())
    @settings(max_examples=60, deadline=None)
    def test_degree_sum(self, G):
        assert sum(G.degrees.values()) == 2 * len(G.edges)

    @given(small_graphs())
    @settings(max_examples=40, deadline=None)
    def test_connectivity_vs_min_degree_and_bridges(self, G):
        if len(connected_components(G)) != 1 or G.vertex_count < 2:
            return
        kappa, _ = edge_connectivity(G)
        assert kappa <= G.min_degree()
        assert bool(bridges(G)) == (kappa == 1)
