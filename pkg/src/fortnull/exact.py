"""Exact rational matrices: patterns, nullspaces, null-vector supports and special bases.

Everything here is :class:`fractions.Fraction` arithmetic; no floats.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .family import FortCollection
from .forts import CapExceeded, _is_fort_mask
from .graph import Graph, bits, lex_key, mask_set
from .transversal import min_transversal

Vector = tuple[Fraction, ...]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as an exact rational (floats are rejected)")


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None):
    """Reduced row echelon form of a rectangular matrix.

    Returns ``(R, pivots)``: the nonzero rows of the reduced form and the
    pivot column of each.  Pivot columns are the greedy lexicographic column
    basis.
    """
    M = [list(r) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def kernel(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Basis of ``{x : M x = 0}``: one vector per free column, 1 there and 0 at the other free columns."""
    R, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def rank_of(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def support(x: Sequence[Fraction]) -> int:
    m = 0
    for i, v in enumerate(x):
        if v != 0:
            m |= 1 << i
    return m


class RationalMatrix:
    """Square matrix of exact rationals (immutable)."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(to_fraction(x) for x in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.rows = rows

    @classmethod
    def zeros(cls, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "RationalMatrix(" + repr([[fraction_str(x) for x in r] for r in self.rows]) + ")"

    def T(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.rows))

    def matvec(self, x: Sequence) -> Vector:
        x = [to_fraction(v) for v in x]
        if len(x) != self.n:
            raise ValueError("dimension mismatch")
        return tuple(sum((a * b for a, b in zip(r, x) if a and b), Fraction(0)) for r in self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        cols = list(zip(*other.rows))
        return RationalMatrix(
            [[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols] for r in self.rows]
        )

    def hadamard(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix([[a * b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.n) for j in range(i))

    def columns(self, mask: int) -> list[list[Fraction]]:
        """Submatrix made of the columns in ``mask`` (rows kept)."""
        idx = bits(mask)
        return [[r[j] for j in idx] for r in self.rows]

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [[fraction_str(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "RationalMatrix":
        M = cls(obj["rows"])
        if "n" in obj and int(obj["n"]) != M.n:
            raise ValueError("declared n disagrees with row count")
        return M


def laplacian(G: Graph) -> RationalMatrix:
    return RationalMatrix(
        [[G.degree(i) if i == j else (-1 if G.has_edge(i, j) else 0) for j in range(G.n)] for i in range(G.n)]
    )


def diagonal(values: Sequence) -> RationalMatrix:
    n = len(values)
    return RationalMatrix([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


# patterns

def pattern_of(A: RationalMatrix) -> Graph:
    """Graph of a combinatorially symmetric matrix (diagonal ignored)."""
    edges = []
    for i in range(A.n):
        for j in range(i + 1, A.n):
            a, b = A[i, j] != 0, A[j, i] != 0
            if a != b:
                raise ValueError(f"not combinatorially symmetric at ({i}, {j})")
            if a:
                edges.append((i, j))
    return Graph.from_edges(A.n, edges)


def in_csym(A: RationalMatrix, G: Graph) -> bool:
    if A.n != G.n:
        return False
    try:
        return pattern_of(A).adj == G.adj
    except ValueError:
        return False


def in_msym(A: RationalMatrix, G: Graph) -> bool:
    return A.is_symmetric() and in_csym(A, G)


# nullspaces

def rank(A: RationalMatrix) -> int:
    return rank_of(A.rows, A.n)


def nullspace(A: RationalMatrix) -> list[Vector]:
    """Basis read off the reduced echelon form; length is ``n - rank``."""
    return kernel(A.rows, A.n)


def nullity(A: RationalMatrix) -> int:
    return A.n - rank(A)


def circuit_vectors(A: RationalMatrix) -> dict[int, Vector]:
    """Minimal supports of nonzero null vectors, each with one null vector realising it.

    With ``N`` an ``n x d`` nullspace basis, a null vector has minimal support
    exactly when its zero set is a rank ``d-1`` flat of the rows of ``N``.  So
    every choice of ``d-1`` independent rows ``R`` gives, through the
    one-dimensional kernel of ``N[R]``, one minimal support.
    """
    basis = nullspace(A)
    d = len(basis)
    if d == 0:
        return {}
    n = A.n
    N = [[basis[k][i] for k in range(d)] for i in range(n)]
    live = [i for i in range(n) if any(N[i])]
    out: dict[int, Vector] = {}
    for R in combinations(live, d - 1):
        sub = [N[i] for i in R]
        ker = kernel(sub, d)
        if len(ker) != 1:
            continue
        y = ker[0]
        x = tuple(sum((N[i][k] * y[k] for k in range(d)), Fraction(0)) for i in range(n))
        s = support(x)
        if s not in out:
            out[s] = x
    return {s: out[s] for s in sorted(out, key=lex_key)}


def min_null_supports(A: RationalMatrix) -> FortCollection:
    """Circuits of the column matroid of ``A`` (minimal null-vector supports)."""
    return FortCollection(A.n, tuple(circuit_vectors(A)), "minimal")


def circuits_by_rank(A: RationalMatrix) -> FortCollection:
    """Same family as :func:`min_null_supports`, found by rank queries on column subsets.

    Exponential in ``n``; used as an independent check on small matrices.
    """
    found: list[int] = []
    for k in range(1, A.n + 1):
        for combo in combinations(range(A.n), k):
            m = sum(1 << v for v in combo)
            if any(c & m == c for c in found):
                continue
            if rank_of(A.columns(m), k) == k - 1:
                found.append(m)
    return FortCollection(A.n, tuple(found), "minimal")


def all_null_supports(A: RationalMatrix, cap: int = 10**6) -> FortCollection:
    """All supports of nonzero null vectors: the nonempty unions of circuits."""
    unions: set[int] = set()
    for c in min_null_supports(A).masks:
        new = {c} | {u | c for u in unions}
        unions |= new
        if len(unions) > cap:
            raise CapExceeded("all_null_supports", cap, len(unions))
    return FortCollection(A.n, tuple(unions), "all")


def realize_union(vectors: Sequence[Sequence[Fraction]]) -> Vector:
    """A combination ``sum t**k x_k`` whose support is the union of the supports.

    Each coordinate of the combination is a nonzero polynomial in ``t`` on the
    union, so only finitely many integers fail; try ``t = 2, 3, ...``.
    """
    if not vectors:
        raise ValueError("need at least one vector")
    target = 0
    for x in vectors:
        target |= support(x)
    n = len(vectors[0])
    t = 2
    while True:
        y = [Fraction(0)] * n
        w = Fraction(1)
        for x in vectors:
            for i, v in enumerate(x):
                if v:
                    y[i] += w * v
            w *= t
        if support(y) == target:
            return tuple(y)
        t += 1


@dataclass(frozen=True)
class SupportCheck:
    ok: bool
    counterexample: frozenset[int] | None = None

    def __bool__(self):
        return self.ok


def verify_support_fort(A: RationalMatrix, G: Graph) -> SupportCheck:
    """Check that every minimal null support of ``A`` is a fort of ``G``.

    Unions of forts are forts, so the minimal supports cover all of them.
    """
    if not in_csym(A, G):
        raise ValueError("matrix is not in csym(G)")
    for c in min_null_supports(A).masks:
        if not _is_fort_mask(G, c):
            return SupportCheck(False, mask_set(c))
    return SupportCheck(True)


def verify_nullity_tau(A: RationalMatrix, cap: int = 10**6) -> dict:
    mins = min_null_supports(A)
    alls = all_null_supports(A, cap)
    rep = {
        "nullity": nullity(A),
        "tau_min": min_transversal(mins).size,
        "tau_all": min_transversal(alls).size,
    }
    rep["equal"] = rep["nullity"] == rep["tau_min"] == rep["tau_all"]
    return rep


@dataclass(frozen=True)
class NullBasis:
    """Null basis indexed by a minimum transversal ``T`` of the null supports.

    ``vectors[i]`` has coordinate 1 at ``transversal[i]`` and 0 at the other
    members of ``T``; its support is ``support_map[transversal[i]]``.
    """

    vectors: tuple[Vector, ...]
    transversal: tuple[int, ...]
    support_map: dict

    def representation(self) -> list[list[Fraction]]:
        """Rows of the basis matrix ``[x_1 ... x_k]``, one per vertex."""
        n = len(self.vectors[0])
        return [[x[i] for x in self.vectors] for i in range(n)]

    def to_json(self, offset: int = 0) -> dict:
        return {
            "transversal": [v + offset for v in self.transversal],
            "vectors": [[fraction_str(x) for x in v] for v in self.vectors],
            "support_map": {str(v + offset): sorted(u + offset for u in self.support_map[v])
                            for v in self.transversal},
        }


def special_null_basis(A: RationalMatrix) -> NullBasis:
    """Basis whose vectors restrict to the standard basis on ``T``.

    The pivot columns of the reduced echelon form are a greedy lexicographic
    column basis ``K``; ``T`` is its complement.
    """
    R, pivots = rref(A.rows, A.n)
    T = [c for c in range(A.n) if c not in set(pivots)]
    if not T:
        raise ValueError("matrix is nonsingular; nullity 0")
    vecs = kernel(A.rows, A.n)
    smap = {v: mask_set(support(x)) for v, x in zip(T, vecs)}
    return NullBasis(tuple(vecs), tuple(T), smap)


# random pattern matrices

def _nonzero(rng: random.Random, bound: int) -> int:
    v = 0
    while v == 0:
        v = rng.randint(-bound, bound)
    return v


def random_csym(G: Graph, seed: int, bound: int = 3, diag_bound: int = 2) -> RationalMatrix:
    """Independent nonzero integers on each ordered edge; diagonal may be zero."""
    rng = random.Random(seed)
    rows = [[0] * G.n for _ in range(G.n)]
    for i in range(G.n):
        rows[i][i] = rng.randint(-diag_bound, diag_bound)
    for u, v in G.edges():
        rows[u][v] = _nonzero(rng, bound)
        rows[v][u] = _nonzero(rng, bound)
    return RationalMatrix(rows)


def random_msym(G: Graph, seed: int, bound: int = 3, diag_bound: int = 2) -> RationalMatrix:
    rng = random.Random(seed)
    rows = [[0] * G.n for _ in range(G.n)]
    for i in range(G.n):
        rows[i][i] = rng.randint(-diag_bound, diag_bound)
    for u, v in G.edges():
        rows[u][v] = rows[v][u] = _nonzero(rng, bound)
    return RationalMatrix(rows)
