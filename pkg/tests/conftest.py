import pytest
from hypothesis import strategies as st

from gemfree.graphs import build_graph


@st.composite
def small_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)) if pairs
                 else st.just([]))
    return build_graph(n, picks)


@pytest.fixture(scope="session")
def corpus():
    """Deterministic class-member corpus shared across the slower tests."""
    from gemfree.generators import class_corpus

    return class_corpus(count=60, n_range=(5, 14), seed=1)
