import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from fortnull import (Graph, bridges, complete, complete_multipartite, components, corona_k1, cycle,
                      disjoint_union, empty, encode_graph6, generate, induced_subgraph, is_bipartite,
                      parse_graph6, path, petersen)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def test_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))


def test_edges_are_lex_ordered():
    G = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
    assert G.edges() == [(0, 1), (0, 2), (2, 3)]


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_graph6_round_trip_and_networkx(G):
    text = encode_graph6(G)
    assert parse_graph6(text) == G
    assert text == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()


def test_graph6_header_and_errors():
    P = petersen()
    assert parse_graph6(">>graph6<<" + encode_graph6(P)) == P
    for bad in ["", "I~", "I" + "?" * 9 + "~", "A_x", "B\x7f"]:
        with pytest.raises(ValueError):
            parse_graph6(bad)


def test_graph6_nonzero_padding_rejected():
    # K2 is "A_"; "Aa" sets a padding bit
    assert parse_graph6("A_").edges() == [(0, 1)]
    with pytest.raises(ValueError):
        parse_graph6("Aa")


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_bridges_match_brute_force(G):
    want = []
    base = len(components(G))
    for e in G.edges():
        H = Graph.from_edges(G.n, [f for f in G.edges() if f != e])
        if len(components(H)) > base:
            want.append(e)
    assert bridges(G) == want
    assert sorted(tuple(sorted(e)) for e in nx.bridges(to_nx(G))) == want


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_bipartition_and_components(G):
    assert (is_bipartite(G) is not None) == nx.is_bipartite(to_nx(G))
    parts = is_bipartite(G)
    if parts is not None:
        a, b = parts
        assert a | b == frozenset(range(G.n)) and not a & b
        assert all((u in a) != (v in a) for u, v in G.edges())
    assert len(components(G)) == nx.number_connected_components(to_nx(G))


def test_generators():
    P = petersen()
    assert P.degrees() == [3] * 10 and P.m == 15
    assert nx.is_isomorphic(to_nx(P), nx.petersen_graph())
    C = corona_k1(cycle(5))
    assert sorted(C.degrees()) == [1] * 5 + [3] * 5
    assert complete(4).m == 6 and path(4).m == 3 and cycle(6).m == 6 and empty(3).m == 0
    K = complete_multipartite(3, 3, 3)
    assert K.degrees() == [6] * 9
    U = disjoint_union(complete(1), complete(2))
    assert U.n == 3 and U.edges() == [(1, 2)]
    assert generate("cycle", 4) == cycle(4)


def test_induced_subgraph():
    H, idx = induced_subgraph(cycle(5), {0, 1, 2})
    assert idx == [0, 1, 2] and H.edges() == [(0, 1), (1, 2)]
    H, idx = induced_subgraph(cycle(5), set())
    assert H.n == 0


def test_json_round_trip():
    G = petersen()
    assert Graph.from_json(G.to_json()) == G
    one = {"n": 3, "edges": [[1, 2], [2, 3]]}
    assert Graph.from_json(one, one_based=True).edges() == [(0, 1), (1, 2)]
