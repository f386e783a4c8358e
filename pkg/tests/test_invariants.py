from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from czdg.errors import ResourceLimitError, SizeLimitError
from czdg.graphs import SimpleGraph, complete_bipartite_graph, complete_graph, cycle_graph, path_graph
from czdg.invariants import (
    INF,
    MdimResult,
    classify_named,
    diameter,
    girth,
    is_connected,
    is_isomorphic,
    is_m_resolving,
    is_resolving,
    metric_dimension,
    multiset_dimension,
)

from oracles import diameter_oracle, dimension_by_bitmask, girth_oracle


def to_simple(G: nx.Graph) -> SimpleGraph:
    nodes = sorted(G.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    return SimpleGraph.from_edges(len(nodes), [(pos[u], pos[v]) for u, v in G.edges()])


graphs = st.integers(1, 9).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n).map(
        lambda es: (n, [(u, v) for u, v in es if u != v])
    )
)


def build(n, es):
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(es)
    return G


@settings(max_examples=300, deadline=None)
@given(graphs)
def test_girth_and_diameter_match_networkx(data):
    G = build(*data)
    S = to_simple(G)
    assert girth(S) == girth_oracle(G)
    assert diameter(S) == diameter_oracle(G)
    assert is_connected(S) == nx.is_connected(G)


@settings(max_examples=200, deadline=None)
@given(graphs, st.randoms(use_true_random=False))
def test_isomorphism_matches_networkx(data, rnd):
    G = build(*data)
    perm = list(range(G.number_of_nodes()))
    rnd.shuffle(perm)
    H = nx.relabel_nodes(G, dict(enumerate(perm)))
    assert is_isomorphic(to_simple(G), to_simple(H))
    # perturb one edge; the oracle decides
    u, v = 0, G.number_of_nodes() - 1
    if u != v:
        K = H.copy()
        if K.has_edge(u, v):
            K.remove_edge(u, v)
        else:
            K.add_edge(u, v)
        assert is_isomorphic(to_simple(G), to_simple(K)) == nx.is_isomorphic(G, K)


def test_isomorphism_limit():
    with pytest.raises(SizeLimitError):
        is_isomorphic(path_graph(17), path_graph(17))


ATLAS = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1]


def test_dual_enumeration_on_all_small_graphs():
    """combinations-order search and bitmask-order search agree on every graph with <= 7 vertices."""
    assert len(ATLAS) == 1252
    for G in ATLAS:
        S = to_simple(G)
        m = multiset_dimension(S)
        expected = dimension_by_bitmask(G, ordered=False)
        if expected is None:
            assert m == MdimResult.infinite()
        else:
            assert m.is_finite and m.value == expected
            if m.value:
                assert is_m_resolving(S, m.witness)
        assert metric_dimension(S) == dimension_by_bitmask(G, ordered=True)


def test_witness_is_lexicographically_first():
    for G in ATLAS[::7]:
        S = to_simple(G)
        m = multiset_dimension(S)
        if not m.is_finite or m.value == 0:
            continue
        first = next(B for B in combinations(range(S.n), m.value) if is_m_resolving(S, B))
        assert m.witness == first


def test_mdim_invariant_under_relabelling():
    G = path_graph(5)
    for perm in list(permutations(range(5)))[::11]:
        H = SimpleGraph.from_edges(5, [(perm[u], perm[v]) for u, v in G.edges()])
        assert multiset_dimension(H) == multiset_dimension(G)


@pytest.mark.parametrize(
    "G,expected",
    [(path_graph(n), 1) for n in range(2, 10)]
    + [(complete_graph(n), None) for n in range(3, 9)]
    + [(cycle_graph(n), 3) for n in range(6, 10)]
    + [(cycle_graph(n), None) for n in (3, 4, 5)]
    + [(complete_bipartite_graph(1, 1), 1), (complete_bipartite_graph(1, 2), 1)]
    + [(complete_bipartite_graph(1, n), None) for n in range(3, 7)]
    + [(complete_bipartite_graph(m, n), None) for m in range(2, 5) for n in range(m, 5)],
)
def test_closed_forms(G, expected):
    m = multiset_dimension(G)
    assert (m.value if m.is_finite else None) == expected


def test_edge_cases():
    assert multiset_dimension(SimpleGraph(0, [], [])) == MdimResult.undefined()
    assert multiset_dimension(SimpleGraph(1, ["a"], [0])) == MdimResult.finite(0)
    assert str(MdimResult.infinite()) == "infinity" and str(MdimResult.undefined()) == "undefined"
    with pytest.raises(ValueError):
        is_m_resolving(path_graph(3), [])
    assert metric_dimension(SimpleGraph(0, [], [])) is None
    assert diameter(SimpleGraph(0, [], [])) is None
    assert diameter(SimpleGraph.from_edges(2, [])) == INF
    assert girth(path_graph(4)) == INF
    assert is_resolving(path_graph(4), [0])


def test_work_limit():
    with pytest.raises(ResourceLimitError) as info:
        multiset_dimension(complete_graph(12), work_limit=100)
    assert info.value.last_completed_k == 2


def test_parallel_search_agrees():
    for G in ATLAS[-60:]:
        S = to_simple(G)
        assert multiset_dimension(S, workers=2) == multiset_dimension(S)


def test_classify_named():
    assert {"path", "star", "complete-bipartite(1,2)"} <= classify_named(path_graph(3))
    assert "cycle" in classify_named(cycle_graph(5))
    assert "complete" in classify_named(complete_graph(4))
    assert classify_named(SimpleGraph(1, ["a"], [0])) == {"single-vertex", "path", "complete"}
    assert "star" in classify_named(complete_bipartite_graph(1, 4))
