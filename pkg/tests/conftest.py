"""Shared fixtures: the small graphs and matrices used across the suite."""

from fractions import Fraction

import pytest

from fortnull import Graph, RationalMatrix, complete_multipartite, corona_k1, cycle, petersen

# 8-vertex two-block graph, written with 1-based labels
BARBELL_EDGES_1 = [(1, 3), (1, 2), (2, 4), (4, 3), (3, 6), (6, 5), (5, 7), (7, 8), (8, 6)]

C_ROWS = [
    [0, -1, 1, 0, 0, 0, 0, 0],
    [-1, 0, 0, 1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, -2, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, -1, 0],
    [0, 0, -2, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, -1, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, -1, 0],
]


def zero_based(sets):
    return [frozenset(v - 1 for v in s) for s in sets]


F1, F2 = zero_based([{1, 4, 6, 7}, {2, 3, 5, 8}])
F3, F4, F5 = zero_based([{1, 4}, {5, 8}, {2, 3, 6, 7}])

PETERSEN_MIN_FORTS = [
    {0, 1, 3, 8}, {0, 1, 9, 7}, {0, 2, 3, 5}, {0, 2, 4, 7}, {0, 8, 2, 9},
    {0, 3, 6, 7}, {0, 8, 4, 6}, {0, 9, 5, 6}, {1, 2, 4, 9}, {8, 1, 2, 5},
    {1, 3, 4, 6}, {1, 3, 5, 9}, {8, 1, 4, 7}, {1, 5, 6, 7}, {9, 2, 3, 6},
    {2, 4, 5, 6}, {8, 2, 6, 7}, {3, 4, 5, 7}, {8, 9, 3, 7}, {8, 9, 4, 5},
]


def modified_c() -> RationalMatrix:
    rows = [list(r) for r in C_ROWS]
    rows[2][3] = rows[6][7] = -1
    rows[2][2] = rows[5][5] = 2
    return RationalMatrix(rows)


@pytest.fixture
def barbell():
    return Graph.from_edges(8, [(u - 1, v - 1) for u, v in BARBELL_EDGES_1])


@pytest.fixture
def matrix_c():
    return RationalMatrix(C_ROWS)


@pytest.fixture
def pete():
    return petersen()


@pytest.fixture
def k333():
    return complete_multipartite(3, 3, 3)


@pytest.fixture
def c5k1():
    return corona_k1(cycle(5))


def frac_rows(rows):
    return [[Fraction(x) for x in r] for r in rows]
