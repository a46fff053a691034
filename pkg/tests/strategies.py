"""Hypothesis strategies for graphs."""

from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from app.graph_core import relabel
from app.schemas import Graph

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 0, max_n: int = 6) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n=n, edges=chosen)


@st.composite
def bipartite_graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 7) -> Graph:
    """Bipartite graph with its sides shuffled over the vertex labels."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    n1 = draw(st.integers(min_value=0, max_value=n))
    pairs = [(u, v) for u in range(n1) for v in range(n1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    permutation = draw(st.permutations(range(n)))
    return relabel(Graph(n=n, edges=chosen), permutation)
