import pytest
from hypothesis import strategies as st

from simedge.graph import Graph, petersen
from simedge.catalog import se_gap_graph


@pytest.fixture(scope="session")
def gap_graph():
    return se_gap_graph()


@pytest.fixture(scope="session")
def petersen_graph():
    return petersen()


@st.composite
def small_graphs(draw, max_vertices=6, min_edges=1):
    """Random simple graph on 2..max_vertices vertices."""
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    picked = draw(
        st.lists(
            st.sampled_from(pairs),
            min_size=min_edges,
            max_size=len(pairs),
            unique=True,
        )
    )
    return Graph(n, tuple(picked))
