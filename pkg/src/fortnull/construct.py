"""Matrices with prescribed null vectors supported on disjoint forts, and SAP checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import RationalMatrix, Vector, fraction_str, kernel, support, to_fraction
from .flows import Bridge, cross_bipartite, zero_sum_flow
from .forts import _is_fort_mask, minimal_forts
from .graph import Graph, bits, mask_set, to_mask


def indicator(n: int, F) -> Vector:
    m = to_mask(F)
    return tuple(Fraction(m >> i & 1) for i in range(n))


@dataclass(frozen=True)
class ConstructionSpec:
    """Graph, pairwise disjoint forts, and one vector supported on each fort.

    ``vectors`` defaults to the 0/1 indicator vectors of the forts.
    """

    G: Graph
    forts: tuple[int, ...]
    vectors: tuple[Vector, ...] = field(default=())

    def __post_init__(self):
        G = self.G
        forts = tuple(G.check_vertices(to_mask(F)) for F in self.forts)
        object.__setattr__(self, "forts", forts)
        if not self.vectors:
            object.__setattr__(self, "vectors", tuple(indicator(G.n, F) for F in forts))
        else:
            object.__setattr__(self, "vectors", tuple(tuple(to_fraction(x) for x in v) for v in self.vectors))
        if len(self.vectors) != len(forts):
            raise ValueError("need exactly one vector per fort")
        seen = 0
        for i, (F, x) in enumerate(zip(forts, self.vectors)):
            if not _is_fort_mask(G, F):
                raise ValueError(f"fort {i} ({bits(F)}) is not a fort of G")
            if F & seen:
                raise ValueError(f"fort {i} ({bits(F)}) meets an earlier fort")
            seen |= F
            if len(x) != G.n:
                raise ValueError(f"vector {i} has length {len(x)}, expected {G.n}")
            if support(x) != F:
                raise ValueError(f"vector {i} has support {bits(support(x))}, expected {bits(F)}")


def annihilates(A: RationalMatrix, vectors) -> list[bool]:
    return [all(y == 0 for y in A.matvec(x)) for x in vectors]


def build_csym_disjoint(spec: ConstructionSpec) -> RationalMatrix:
    """A matrix in csym(G) killing every ``x_i``.

    Each row is filled independently.  For row ``v`` and fort ``F_i`` the
    entries on ``N(v) & F_i`` (plus the diagonal when ``v`` is in ``F_i``)
    are ``1/x_i(u)`` except the last, which cancels the rest.  The fort
    condition guarantees at least two such entries whenever ``v`` is outside
    ``F_i``, so nothing cancels to zero.
    """
    G = spec.G
    n = G.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for u, v in G.edges():
        rows[u][v] = rows[v][u] = Fraction(1)
    for v in range(n):
        for F, x in zip(spec.forts, spec.vectors):
            nbrs = bits(G.adj[v] & F)
            if F >> v & 1:
                for u in nbrs:
                    rows[v][u] = 1 / x[u]
                rows[v][v] = -Fraction(len(nbrs)) / x[v]
            elif nbrs:
                for u in nbrs[:-1]:
                    rows[v][u] = 1 / x[u]
                last = nbrs[-1]
                rows[v][last] = -Fraction(len(nbrs) - 1) / x[last]
    A = RationalMatrix(rows)
    if not all(annihilates(A, spec.vectors)):
        raise AssertionError("construction failed to annihilate the vectors")
    return A


@dataclass(frozen=True)
class Obstruction:
    """Forts ``pair`` (0-based indices into the spec) whose cross graph has ``bridge``."""

    pair: tuple[int, int]
    bridge: tuple[int, int]

    def to_json(self, offset: int = 0) -> dict:
        return {"pair": list(self.pair),
                "bridge": [self.bridge[0] + offset, self.bridge[1] + offset]}


def _laplacian_block(G: Graph, S: int, rows, shift: int = 0):
    for u in bits(S):
        nb = bits(G.adj[u] & S)
        rows[u][u] += len(nb) + shift
        for w in nb:
            rows[u][w] = Fraction(-1)


def build_msym_disjoint(spec: ConstructionSpec) -> RationalMatrix | Obstruction:
    """A symmetric matrix in msym(G) killing every ``x_i``, or the bridged pair.

    The vectors are first scaled to indicators by ``D`` (``D[j,j] = x_i(j)`` on
    ``F_i``, 1 elsewhere).  The normalised matrix has: Laplacians of
    ``G[F_i]`` on the diagonal blocks; a zero-sum flow of each cross graph
    ``H_ij`` between forts; rows outside the forts balanced per fort; and
    Laplacian plus identity on the remainder.  The result is
    ``D^-1 (normalised) D^-1``.
    """
    G = spec.G
    n = G.n
    m = len(spec.forts)
    flows = {}
    for i in range(m):
        for j in range(i + 1, m):
            H = cross_bipartite(G, spec.forts[i], spec.forts[j])
            f = zero_sum_flow(H.graph)
            if isinstance(f, Bridge):
                return Obstruction((i, j), f.edge)
            flows[i, j] = f
    rows = [[Fraction(0)] * n for _ in range(n)]
    F_all = 0
    for F in spec.forts:
        F_all |= F
        _laplacian_block(G, F, rows)
    for f in flows.values():
        for (u, v), w in f.weights.items():
            rows[u][v] = rows[v][u] = w
    rest = G.vertices & ~F_all
    for r in bits(rest):
        for F in spec.forts:
            nb = bits(G.adj[r] & F)
            if not nb:
                continue
            vals = [Fraction(1)] * (len(nb) - 1) + [Fraction(1 - len(nb))]
            for u, w in zip(nb, vals):
                rows[r][u] = rows[u][r] = w
    _laplacian_block(G, rest, rows, shift=1)
    scale = [Fraction(1)] * n
    for F, x in zip(spec.forts, spec.vectors):
        for j in bits(F):
            scale[j] = x[j]
    A = RationalMatrix([[rows[i][j] / (scale[i] * scale[j]) for j in range(n)] for i in range(n)])
    if not all(annihilates(A, spec.vectors)):
        raise AssertionError("construction failed to annihilate the vectors")
    return A


def _symmetric_pattern_system(spec: ConstructionSpec):
    """Unknowns: one per edge then one per diagonal entry; equations ``A x_i = 0``."""
    G = spec.G
    es = G.edges()
    nvar = len(es) + G.n
    eqs = []
    for x in spec.vectors:
        for r in range(G.n):
            row = [Fraction(0)] * nvar
            for k, (u, v) in enumerate(es):
                if u == r:
                    row[k] += x[v]
                elif v == r:
                    row[k] += x[u]
            row[len(es) + r] = x[r]
            if any(row):
                eqs.append(row)
    return es, nvar, eqs


def forced_zero_entries(spec: ConstructionSpec) -> set[tuple[int, int]]:
    """Edges whose entry is zero in every symmetric matrix (pattern within G) killing the ``x_i``.

    Diagonal entries are free unknowns and never reported.
    """
    es, nvar, eqs = _symmetric_pattern_system(spec)
    basis = kernel(eqs, nvar)
    return {e for k, e in enumerate(es) if all(b[k] == 0 for b in basis)}


def check_barbell(G: Graph, W1, W2) -> bool:
    """The three barbell partition conditions, checked directly."""
    a, b = to_mask(W1), to_mask(W2)
    if not a or not b or a & b:
        return False
    if any(G.adj[v] & b for v in bits(a)):
        return False
    R = G.vertices & ~(a | b)
    return all((G.adj[v] & W).bit_count() != 1 for v in bits(R) for W in (a, b))


def barbell_partition(G: Graph):
    """First separated pair of minimal forts, as ``(W1, W2, R)``, or ``None``.

    Any separated pair of forts contains a separated pair of minimal forts.
    """
    forts = minimal_forts(G).masks
    for i, a in enumerate(forts):
        closed = a
        for v in bits(a):
            closed |= G.adj[v]
        for b in forts[i + 1:]:
            if not b & closed:
                R = G.vertices & ~(a | b)
                if not check_barbell(G, a, b):
                    raise AssertionError("separated forts failed the barbell conditions")
                return mask_set(a), mask_set(b), mask_set(R)
    return None


@dataclass(frozen=True)
class SapResult:
    has_sap: bool
    witness: RationalMatrix | None = None

    def to_json(self) -> dict:
        out = {"has_sap": self.has_sap}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def sap_check(A: RationalMatrix) -> SapResult:
    """Strong Arnold Property: is ``X = 0`` the only symmetric ``X`` with
    ``A o X = I o X = A X = 0``?

    The unknowns are ``X[i,j]`` for non-adjacent ``i < j``; the system
    ``A X = 0`` is solved exactly.
    """
    if not A.is_symmetric():
        raise ValueError("SAP is checked for symmetric matrices only")
    n = A.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if A[i, j] == 0]
    col = {p: k for k, p in enumerate(pairs)}
    eqs = []
    for r in range(n):
        for c in range(n):
            row = [Fraction(0)] * len(pairs)
            for k in range(n):
                a = A[r, k]
                key = (min(k, c), max(k, c))
                if a == 0 or key not in col:
                    continue
                row[col[key]] += a
            if any(row):
                eqs.append(row)
    basis = kernel(eqs, len(pairs))
    if not basis:
        return SapResult(True)
    X = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), v in zip(pairs, basis[0]):
        X[i][j] = X[j][i] = v
    return SapResult(False, RationalMatrix(X))


def sap_identities(A: RationalMatrix, X: RationalMatrix) -> dict:
    I = RationalMatrix.identity(A.n)
    return {"A∘X": A.hadamard(X).is_zero(), "I∘X": I.hadamard(X).is_zero(), "AX": (A @ X).is_zero()}


def build_barbell_matrix(G: Graph, W1, W2) -> tuple[RationalMatrix, RationalMatrix]:
    """Symmetric ``A`` in msym(G) without the SAP, with the block all-ones witness ``X``."""
    a, b = G.check_vertices(to_mask(W1)), G.check_vertices(to_mask(W2))
    if not check_barbell(G, a, b):
        raise ValueError("W1, W2 are not separated forts")
    A = build_msym_disjoint(ConstructionSpec(G, (a, b)))
    assert isinstance(A, RationalMatrix)  # separated forts: the cross graph is edgeless
    n = G.n
    X = RationalMatrix([[int((a >> i & 1 and b >> j & 1) or (b >> i & 1 and a >> j & 1)) for j in range(n)]
                        for i in range(n)])
    if not all(sap_identities(A, X).values()):
        raise AssertionError("barbell witness failed the SAP identities")
    return A, X


def spec_to_json(spec: ConstructionSpec, offset: int = 0) -> dict:
    return {"forts": [[v + offset for v in bits(F)] for F in spec.forts],
            "vectors": [[fraction_str(x) for x in v] for v in spec.vectors]}
