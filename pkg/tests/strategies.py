"""Shared hypothesis strategies for graph-valued properties."""

from hypothesis import strategies as st

from steinerk import Graph


@st.composite
def graphs(draw, min_order: int = 1, max_order: int = 8) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n, [])
    edges = draw(st.sets(st.sampled_from(pairs)))
    return Graph(n, edges)


@st.composite
def connected_graphs(draw, min_order: int = 2, max_order: int = 8) -> Graph:
    g = draw(graphs(min_order, max_order))
    # splice in a random recursive tree so every vertex is reachable
    parents = [draw(st.integers(0, v - 1)) for v in range(1, g.order)]
    spine = [(p, v + 1) for v, p in enumerate(parents)]
    return Graph(g.order, list(g.edges) + spine)


@st.composite
def graph_with_terminals(draw, min_k: int = 2, max_k: int = 5, connected: bool = True):
    lo = max(2, min_k)
    g = draw(connected_graphs(min_order=lo, max_order=9) if connected
             else graphs(min_order=lo, max_order=9))
    k = draw(st.integers(min_k, min(max_k, g.order)))
    terms = draw(st.permutations(range(g.order)))[:k]
    return g, sorted(terms)
