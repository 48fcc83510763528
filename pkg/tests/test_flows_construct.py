from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from fortnull import (Bridge, ConstructionSpec, FlowAssignment, Obstruction, RationalMatrix, barbell_partition,
                      bridge_forced_zero, bridges, build_barbell_matrix, build_csym_disjoint, build_msym_disjoint,
                      check_barbell, complete, complete_multipartite, cross_bipartite, cycle,
                      enumerate_simple_cycles, forced_zero_entries, in_csym, in_msym, is_bipartite, path, sap_check, sap_identities, zero_sum_flow)
from fortnull.construct import annihilates
from fortnull.exact import support

from conftest import F1, F2, F3, F4, F5, modified_c
from test_exact import mask_of
from test_graph import graphs, to_nx


@given(graphs(max_n=7))
@settings(max_examples=80, deadline=None)
def test_cycles_match_networkx(G):
    ours = enumerate_simple_cycles(G)
    theirs = {frozenset(map(frozenset, zip(c, c[1:] + c[:1]))) for c in nx.simple_cycles(to_nx(G)) if len(c) > 2}
    assert len(ours) == len(theirs)
    assert {frozenset(map(frozenset, zip(c, c[1:] + c[:1]))) for c in ours} == theirs
    for c in ours:
        assert c[0] == min(c) and c[1] < c[-1]


def test_cycle_counts():
    assert len(enumerate_simple_cycles(complete(4))) == 7
    assert len(enumerate_simple_cycles(complete(5))) == 37


@pytest.mark.parametrize("G", [cycle(4), cycle(6), complete_multipartite(3, 3)])
def test_flows_exist(G):
    f = zero_sum_flow(G)
    assert isinstance(f, FlowAssignment) and f.is_valid(G)
    assert all(s == 0 for s in f.vertex_sums(G.n))


def test_c4_flow_values():
    f = zero_sum_flow(cycle(4))
    assert sorted(set(abs(w) for w in f.weights.values())) == [Fraction(1, 2)]


def test_flow_bridges(barbell):
    assert zero_sum_flow(complete(2)) == Bridge((0, 1))
    assert zero_sum_flow(barbell) == Bridge((2, 5))
    with pytest.raises(ValueError):
        zero_sum_flow(cycle(5))


@given(graphs(max_n=8))
@settings(max_examples=80, deadline=None)
def test_flow_or_bridge(G):
    if is_bipartite(G) is None:
        return
    res = zero_sum_flow(G)
    if isinstance(res, Bridge):
        assert res.edge in bridges(G)
    else:
        assert res.is_valid(G)
    for e in bridges(G):
        assert bridge_forced_zero(G, e)


def test_cross_graph(barbell):
    H = cross_bipartite(barbell, F1, F2)
    assert H.graph.n == 8
    assert H.graph.edges() == [(0, 1), (0, 2), (1, 3), (2, 3), (2, 5), (4, 5), (4, 6), (5, 7), (6, 7)]
    assert bridges(H.graph) == [(2, 5)]
    with pytest.raises(ValueError):
        cross_bipartite(barbell, {0, 1}, {1, 2})


def test_csym_construction(barbell):
    spec = ConstructionSpec(barbell, (F1, F2))
    A = build_csym_disjoint(spec)
    assert in_csym(A, barbell) and all(annihilates(A, spec.vectors))


def test_msym_obstruction(barbell):
    spec = ConstructionSpec(barbell, (F1, F2))
    assert forced_zero_entries(spec) == {(2, 5)}
    res = build_msym_disjoint(spec)
    assert res == Obstruction((0, 1), (2, 5))


def test_msym_positive(barbell):
    spec = ConstructionSpec(barbell, (F3, F4, F5))
    A = build_msym_disjoint(spec)
    assert isinstance(A, RationalMatrix)
    assert A.is_symmetric() and in_msym(A, barbell) and all(annihilates(A, spec.vectors))
    assert forced_zero_entries(spec) == set()


def test_modified_c_has_the_three_supports(barbell):
    A = modified_c()
    assert in_msym(A, barbell)
    for F in (F3, F4, F5):
        assert null_vector_on(A, F) is not None


def null_vector_on(A, F):
    """A null vector with support exactly F, if one exists."""
    m = mask_of(F)
    cols = sorted(F)
    from fortnull.exact import kernel
    for x in kernel(A.columns(m), len(cols)):
        full = [Fraction(0)] * A.n
        for v, val in zip(cols, x):
            full[v] = val
        if support(full) == m:
            return full
    return None


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_constructions_with_random_vectors(seed):
    import random
    G = cycle(6)
    forts = [frozenset({0, 2, 4}), frozenset({1, 3, 5})]
    rng = random.Random(seed)
    vecs = [tuple(rng.choice([-2, -1, 1, 3]) if v in F else 0 for v in range(6)) for F in forts]
    spec = ConstructionSpec(G, tuple(forts), tuple(vecs))
    A = build_csym_disjoint(spec)
    assert in_csym(A, G) and all(annihilates(A, spec.vectors))
    B = build_msym_disjoint(spec)
    assert isinstance(B, RationalMatrix) and in_msym(B, G) and all(annihilates(B, spec.vectors))


def test_spec_validation(barbell):
    with pytest.raises(ValueError):
        ConstructionSpec(barbell, (F1, F1))
    with pytest.raises(ValueError):
        ConstructionSpec(barbell, ({0},))
    with pytest.raises(ValueError):
        ConstructionSpec(barbell, (F3,), ((1, 0, 0, 0, 0, 0, 0, 0),))


def test_barbell_and_sap(barbell):
    W1, W2, R = barbell_partition(barbell)
    assert check_barbell(barbell, W1, W2) and W1 | W2 | R == frozenset(range(8))
    A, X = build_barbell_matrix(barbell, F3, F4)
    assert all(sap_identities(A, X).values()) and not X.is_zero()
    res = sap_check(A)
    assert not res.has_sap and all(sap_identities(A, res.witness).values()) and not res.witness.is_zero()
    assert barbell_partition(complete(4)) is None
    with pytest.raises(ValueError):
        build_barbell_matrix(barbell, F1, F2)


def test_sap_holds_for_path_laplacian():
    from fortnull import laplacian
    assert sap_check(laplacian(path(4))).has_sap
    with pytest.raises(ValueError):
        sap_check(RationalMatrix([[0, 1], [2, 0]]))
