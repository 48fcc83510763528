"""An 8-vertex graph made of two 4-cycles joined by the edge 3-6 (labels 1..8).

The forts {1,4,6,7} and {2,3,5,8} support null vectors of a combinatorially
symmetric matrix, but no symmetric matrix can do it: the cross graph between
them has the bridge 3-6, which forces that entry to zero.
"""

from fortnull import (ConstructionSpec, Graph, RationalMatrix, build_barbell_matrix, build_csym_disjoint,
                      build_msym_disjoint, forced_zero_entries, min_null_supports, nullity, sap_check)

EDGES = [(1, 3), (1, 2), (2, 4), (4, 3), (3, 6), (6, 5), (5, 7), (7, 8), (8, 6)]
G = Graph.from_edges(8, [(u - 1, v - 1) for u, v in EDGES])


def one_based(sets):
    return [sorted(v + 1 for v in s) for s in sets]


def zero_based(*sets):
    return tuple(frozenset(v - 1 for v in s) for s in sets)


F1, F2 = zero_based({1, 4, 6, 7}, {2, 3, 5, 8})
C = RationalMatrix([
    [0, -1, 1, 0, 0, 0, 0, 0],
    [-1, 0, 0, 1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, -2, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, -1, 0],
    [0, 0, -2, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, -1, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, -1, 0],
])
print("nullity of C:", nullity(C), " minimal null supports:", one_based(min_null_supports(C).sets()))

spec = ConstructionSpec(G, (F1, F2))
A = build_csym_disjoint(spec)
print("csym construction kills both indicators; nullity", nullity(A))
print("entries forced to zero in any symmetric choice:", [(u + 1, v + 1) for u, v in forced_zero_entries(spec)])
obs = build_msym_disjoint(spec)
print("symmetric construction:", obs)

F3, F4, F5 = zero_based({1, 4}, {5, 8}, {2, 3, 6, 7})
S = build_msym_disjoint(ConstructionSpec(G, (F3, F4, F5)))
print("symmetric construction for {1,4}, {5,8}, {2,3,6,7}: nullity", nullity(S))

A, X = build_barbell_matrix(G, F3, F4)
print("barbell matrix has the SAP:", sap_check(A).has_sap)
