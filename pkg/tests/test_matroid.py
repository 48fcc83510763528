from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from fortnull import (Budget, BudgetExhausted, IncompatibleFamilyError, MatroidView, NonUniqueFortError,
                      NotMinimumError, NotTransversalError, all_forts, bound_chain, check_circuit_axioms,
                      compatibility, complete, complete_multipartite, corona_k1, cycle, embed_matroid,
                      find_compatible_family, fundamental_forts, is_compatible, min_transversal, minimal_forts,
                      path, petersen, y_number, zero_forcing_number)
from fortnull.matroid import brute_force_rank, matroid_rank, propagate_obligations

from test_graph import graphs

U24 = [set(c) for c in combinations(range(4), 3)]


def brute_y(G):
    """Largest transversal number over compatible subfamilies of all forts (tiny graphs only)."""
    forts = list(all_forts(G).masks)
    best = 0
    for r in range(1, len(forts) + 1):
        for fam in combinations(forts, r):
            if compatibility(fam):
                best = max(best, min_transversal(fam).size)
    return best


def test_circuit_axioms():
    assert check_circuit_axioms(4, U24)
    assert check_circuit_axioms(3, [{0}, {1, 2}])
    assert check_circuit_axioms(3, [set()]).axiom == 1
    assert check_circuit_axioms(3, [{0}, {0, 1}]).axiom == 2
    bad = check_circuit_axioms(4, [{0, 1, 2}, {0, 1, 3}])
    assert bad.axiom == 3 and bad.x in (0, 1)
    with pytest.raises(ValueError):
        check_circuit_axioms(2, [{0, 5}])


def test_matroid_view():
    M = MatroidView.from_sets(4, U24)
    assert M.is_independent({0, 1}) and not M.is_independent({0, 1, 2})
    assert M.fundamental_circuit({0, 1}, 2) == frozenset({0, 1, 2})
    assert matroid_rank(M) == brute_force_rank(M) == 2
    with pytest.raises(ValueError):
        MatroidView.from_sets(4, [{0, 1, 2}, {0, 1, 3}])
    with pytest.raises(ValueError):
        M.fundamental_circuit({0, 1, 2}, 3)
    L = MatroidView.from_sets(3, [{0}, {1, 2}])
    assert L.loops == [0] and matroid_rank(L) == 1


@given(st.integers(1, 6), st.integers(1, 6))
@settings(max_examples=30, deadline=None)
def test_uniform_rank(k, n):
    if k > n:
        return
    M = MatroidView.from_sets(n, [set(c) for c in combinations(range(n), k + 1)]) if k < n else \
        MatroidView.from_sets(n, [])
    assert matroid_rank(M) == brute_force_rank(M) == k


def test_embedding():
    rep = embed_matroid(MatroidView.from_sets(4, U24))
    assert rep.graph == complete(4) and rep.circuits_are_forts and rep.loops == ()
    rep = embed_matroid(MatroidView.from_sets(3, [{0}, {1, 2}]))
    assert rep.graph.edges() == [(1, 2)] and rep.loops == (0,) and rep.circuits_are_forts


def test_compatibility_reports():
    assert compatibility(U24)
    rep = compatibility([{0, 1, 2}, {0, 1, 3}])
    assert not rep and rep.violation[2] in (0, 1)
    assert rep.to_json(1)["violation"]["F1"] == [1, 2, 3]
    with pytest.raises(ValueError):
        is_compatible(path(3), [{0}])


def test_fundamental_forts():
    fam = [{0, 1}, {1, 2}]
    assert fundamental_forts([{0, 1}, {2, 3}], {0, 2}) == {0: frozenset({0, 1}), 2: frozenset({2, 3})}
    with pytest.raises(NotTransversalError):
        fundamental_forts(fam, {0})
    with pytest.raises(NotMinimumError):
        fundamental_forts(fam, {0, 2})
    with pytest.raises(NonUniqueFortError):
        fundamental_forts([{0, 1}, {0, 2}], {0})
    with pytest.raises(IncompatibleFamilyError):
        fundamental_forts([{0, 1, 2}, {0, 1, 3}], {0})


def test_fundamental_forts_of_k4():
    forts = minimal_forts(complete(4))
    got = fundamental_forts(forts, {0, 1, 2})
    assert got == {0: frozenset({0, 3}), 1: frozenset({1, 3}), 2: frozenset({2, 3})}


@given(graphs(max_n=5))
@settings(max_examples=60, deadline=None)
def test_y_matches_brute_force(G):
    if G.n == 0 or len(all_forts(G)) > 16:
        return
    res = y_number(G)
    assert res.proven and res.value == brute_y(G)
    assert compatibility(res.witness)
    assert min_transversal(res.witness).size == res.value or res.value == 0


@pytest.mark.parametrize("G, want", [(complete(5), 4), (cycle(6), 2), (path(5), 1), (petersen(), 5),
                                     (complete_multipartite(3, 3, 3), 7), (corona_k1(cycle(5)), 2)])
def test_y_values(G, want):
    res = y_number(G)
    assert res.proven and res.value == want


def test_budget():
    with pytest.raises(BudgetExhausted):
        find_compatible_family(list(all_forts(corona_k1(cycle(5))).masks), 3, Budget(max_nodes=5))
    res = y_number(corona_k1(cycle(5)), max_nodes=5)
    assert not res.proven and res.value >= 1


def test_bound_chain():
    ch = bound_chain(petersen())
    assert (ch.ft, ch.Z, ch.Y, ch.Y_proven) == (2, 5, 5, True) and ch.consistent()
    assert ch.ft <= ch.N_lower <= ch.Y
    js = ch.to_json()
    assert set(js) == {"chain", "witness"}


def test_propagation_trace():
    P = petersen()
    forts = list(minimal_forts(P).masks)
    a, b = sum(1 << v for v in (0, 5, 6, 9)), sum(1 << v for v in (2, 6, 7, 8))
    tr = propagate_obligations(forts, [a, b])
    assert [0, 2, 8, 9] in tr["family"]
    assert tr["contradiction"]


def test_z_is_upper_bound_on_small_graphs():
    for G in [path(4), cycle(5), complete(4)]:
        assert y_number(G).value <= zero_forcing_number(G)[0]


def test_fundamental_forts_path_example():
    # {0,1} and {1,2} both meet T = {1} only in 1, which already rules out compatibility
    with pytest.raises(NonUniqueFortError):
        fundamental_forts([{0, 1}, {1, 2}], {1})


def test_petersen_private_forts_of_outer_cycle():
    forts = list(minimal_forts(petersen()).masks)
    outer = 0b11111
    private = sorted(sorted(v for v in range(10) if m >> v & 1) for m in forts if (m & outer).bit_count() == 1)
    assert private == [[0, 5, 6, 9], [1, 5, 6, 7], [2, 6, 7, 8], [3, 7, 8, 9], [4, 5, 8, 9]]
    assert min_transversal(forts).size == 5
    with pytest.raises(IncompatibleFamilyError):
        fundamental_forts(forts, set(range(5)))
