import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclicsg.gamma_graph import build_gamma
from cyclicsg.graph_invariants import (
    DISCONNECTED,
    INF,
    UNREACHABLE,
    PlainGraph,
    adjacency,
    cycle_lengths_through,
    diameter,
    distance,
    girth,
    is_bipartite,
    summarize,
)
from cyclicsg.group_core import make_cyclic, make_dihedral


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return PlainGraph.from_edges(n, edges)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


@given(graphs())
@settings(max_examples=200)
def test_diameter_against_networkx(g):
    h = _nx(g)
    ours = diameter(adjacency(g))
    if nx.is_connected(h):
        assert ours == nx.diameter(h)
    else:
        assert ours == DISCONNECTED


@given(graphs())
@settings(max_examples=200)
def test_girth_against_networkx(g):
    ref = nx.girth(_nx(g))
    assert girth(adjacency(g)) == (INF if ref == float("inf") else ref)


@given(graphs())
@settings(max_examples=200)
def test_bipartite_against_networkx(g):
    assert is_bipartite(adjacency(g)) == nx.is_bipartite(_nx(g))


@given(graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_cycle_lengths_against_networkx(g):
    ref = {len(c) for c in nx.simple_cycles(_nx(g)) if 0 in c and len(c) >= 3}
    assert cycle_lengths_through(adjacency(g), 0) == ref


def test_shapes():
    path = summarize(PlainGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    assert path.path_graph and path.tree and not path.cycle_graph
    cyc = summarize(PlainGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    assert cyc.cycle_graph and cyc.eulerian and cyc.girth == 4 and cyc.regular
    star = summarize(PlainGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert star.star_graph and not star.path_graph and star.pendant_count == 3
    k2 = summarize(PlainGraph.from_edges(2, [(0, 1)]))
    assert k2.complete_graph and k2.path_graph and k2.star_graph


def test_single_vertex():
    s = summarize(PlainGraph.from_edges(1, []))
    assert s.diameter == 0 and s.girth == INF and s.complete_graph
    assert s.path_graph and not s.star_graph and s.tree


def test_disconnected():
    s = summarize(PlainGraph.from_edges(3, [(0, 1)]))
    assert s.diameter == DISCONNECTED and not s.connected
    assert distance(PlainGraph.from_edges(3, [(0, 1)]), 0, 2) == UNREACHABLE


def test_bad_edges():
    with pytest.raises(ValueError):
        PlainGraph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        PlainGraph.from_edges(2, [(0, 2)])


def test_gamma_examples():
    g = build_gamma(make_dihedral(6))
    refl = g.labels.index("Z2#1")
    assert g.vertices[refl].elements[-1] >= 6  # a reflection subgroup
    assert distance(g, refl, g.index_of(6, 0)) == 3
    assert summarize(build_gamma(make_cyclic(6))).cycle_graph
    assert summarize(build_gamma(make_cyclic(16))).path_graph


def test_summary_dict():
    d = summarize(build_gamma(make_cyclic(12))).to_dict()
    assert d["vertex_count"] == 6 and d["degree_sequence"] == [2, 2, 2, 2, 3, 3]
