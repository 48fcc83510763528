"""Circuit axioms, fort compatibility, fundamental forts, Y(G) and the bound chain."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .family import FortCollection, as_masks
from .forcing import zero_forcing_number
from .forts import _is_fort_mask, all_forts, fort_number, minimal_forts
from .graph import Graph, bits, lex_key, mask_set, require_search_size, to_mask
from .transversal import hits_all, min_transversal


# circuit axioms and compatibility

@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: int | None = None
    sets: tuple[frozenset[int], ...] = ()
    x: int | None = None

    def __bool__(self):
        return self.ok


def check_circuit_axioms(ground_n: int, family) -> AxiomReport:
    """Check the three circuit axioms of a matroid on ``range(ground_n)``."""
    masks = sorted(set(to_mask(s) for s in family), key=lambda m: (m.bit_count(), lex_key(m)))
    for m in masks:
        if m >> ground_n:
            raise ValueError(f"{bits(m)} is not inside the ground set")
    if 0 in masks:
        return AxiomReport(False, 1, (frozenset(),))
    for a in masks:
        for b in masks:
            if a != b and a & b == a:
                return AxiomReport(False, 2, (mask_set(a), mask_set(b)))
    v = exchange_violation(sorted(masks, key=lex_key))
    if v is not None:
        return AxiomReport(False, 3, (mask_set(v[0]), mask_set(v[1])), v[2])
    return AxiomReport(True)


def exchange_violation(masks: list[int]) -> tuple[int, int, int] | None:
    """First ``(F1, F2, x)`` with no member inside ``(F1 | F2) - x``."""
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            for x in bits(a & b):
                t = (a | b) & ~(1 << x)
                if not any(c & ~t == 0 for c in masks):
                    return a, b, x
    return None


@dataclass(frozen=True)
class CompatibilityReport:
    compatible: bool
    violation: tuple[frozenset[int], frozenset[int], int] | None = None

    def __bool__(self):
        return self.compatible

    def to_json(self, offset: int = 0) -> dict:
        out = {"compatible": self.compatible}
        if self.violation is not None:
            f1, f2, x = self.violation
            out["violation"] = {"F1": sorted(v + offset for v in f1), "F2": sorted(v + offset for v in f2),
                                "x": x + offset}
        return out


def compatibility(family) -> CompatibilityReport:
    """Exchange condition on a family of sets (no graph needed)."""
    masks = sorted(set(as_masks(family)), key=lex_key)
    v = exchange_violation(masks)
    if v is None:
        return CompatibilityReport(True)
    return CompatibilityReport(False, (mask_set(v[0]), mask_set(v[1]), v[2]))


def is_compatible(G: Graph, family) -> CompatibilityReport:
    """Compatibility of a family of forts of ``G``; non-forts raise ``ValueError``."""
    for m in as_masks(family):
        if not _is_fort_mask(G, G.check_vertices(m)):
            raise ValueError(f"{bits(m)} is not a fort of G")
    return compatibility(family)


# matroids given by circuits

@dataclass(frozen=True)
class MatroidView:
    ground_n: int
    circuits: FortCollection

    def __post_init__(self):
        rep = check_circuit_axioms(self.ground_n, self.circuits.masks)
        if not rep:
            raise ValueError(f"circuit axiom {rep.axiom} fails on {[sorted(s) for s in rep.sets]}")

    @classmethod
    def from_sets(cls, ground_n: int, sets) -> "MatroidView":
        return cls(ground_n, FortCollection.from_sets(ground_n, sets))

    def is_independent(self, I) -> bool:
        m = to_mask(I)
        return not any(c & m == c for c in self.circuits.masks)

    def fundamental_circuit(self, I, x: int) -> frozenset[int]:
        """The unique circuit inside ``I + x`` (``I`` independent, ``I + x`` dependent)."""
        m = to_mask(I)
        if not self.is_independent(m):
            raise ValueError("I is not independent")
        hits = [c for c in self.circuits.masks if c & ~(m | 1 << x) == 0]
        if not hits:
            raise ValueError("I + x is independent")
        assert len(hits) == 1
        return mask_set(hits[0])

    @property
    def loops(self) -> list[int]:
        return [bits(c)[0] for c in self.circuits.masks if c.bit_count() == 1]


def matroid_rank(M: MatroidView) -> int:
    """``n - tau(circuits)``: the complement of a minimum transversal is a basis."""
    return M.ground_n - min_transversal(M.circuits).size


def brute_force_rank(M: MatroidView) -> int:
    for k in range(M.ground_n, -1, -1):
        for combo in combinations(range(M.ground_n), k):
            if M.is_independent(combo):
                return k
    return 0


@dataclass(frozen=True)
class EmbeddingReport:
    graph: Graph
    loops: tuple[int, ...]
    circuits_are_forts: bool

    def to_json(self, offset: int = 0) -> dict:
        edges = [[u + offset, v + offset] for u, v in self.graph.edges()]
        return {"graph": {"n": self.graph.n, "edges": edges}, "loops": [v + offset for v in self.loops],
                "circuits_are_forts": self.circuits_are_forts}


def embed_matroid(M: MatroidView) -> EmbeddingReport:
    """Graph with loops isolated and all other elements forming a clique.

    Every circuit with at least two elements is then a fort of the clique,
    and each loop is a fort as an isolated vertex.
    """
    loops = M.loops
    lm = to_mask(loops)
    rest = [v for v in range(M.ground_n) if not lm >> v & 1]
    G = Graph.from_edges(M.ground_n, list(combinations(rest, 2)))
    ok = all(_is_fort_mask(G, c) for c in M.circuits.masks)
    return EmbeddingReport(G, tuple(loops), ok)


# fundamental forts

class NotTransversalError(ValueError):
    pass


class NotMinimumError(ValueError):
    pass


class IncompatibleFamilyError(ValueError):
    pass


class NonUniqueFortError(IncompatibleFamilyError):
    """Two members meet the transversal only in the same vertex."""


def fundamental_forts(family, T) -> dict[int, frozenset[int]]:
    """For each ``v`` in a minimum transversal ``T`` the unique member meeting ``T`` only in ``v``."""
    masks = sorted(set(as_masks(family)), key=lex_key)
    t = to_mask(T)
    if not hits_all(t, masks):
        missed = next(m for m in masks if not m & t)
        raise NotTransversalError(f"T misses {bits(missed)}")
    best = min_transversal(masks).size
    if t.bit_count() != best:
        raise NotMinimumError(f"|T| = {t.bit_count()} but the minimum is {best}")
    out = {}
    for v in bits(t):
        own = [m for m in masks if m & t == 1 << v]
        if len(own) != 1:
            if not own:
                raise AssertionError("a minimum transversal always has a private member")
            raise NonUniqueFortError(f"vertex {v} is the only T-vertex of {[bits(m) for m in own]}")
        out[v] = mask_set(own[0])
    rep = compatibility(masks)
    if not rep:
        raise IncompatibleFamilyError(f"family is not compatible: {rep.violation}")
    return out


# budgets

class BudgetExhausted(RuntimeError):
    pass


class Budget:
    def __init__(self, max_nodes: int | None = None, time_limit: float | None = None):
        self.max_nodes = max_nodes
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted(f"node limit {self.max_nodes} reached")
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted("time limit reached")


# compatible-family search

def find_compatible_family(universe: Iterable[int], k: int, budget: Budget | None = None,
                           on_family: Callable[[list[int]], None] | None = None) -> list[int] | None:
    """A compatible antichain drawn from ``universe`` with transversal number at least ``k``.

    Returns ``None`` when the (complete) search shows there is none.  The
    search grows an antichain; at each node it picks the unmet requirement
    with the fewest candidates: either an exchange obligation
    ``(F1 | F2) - x`` that no member fits inside, or the minimum transversal
    ``T`` of the current family, which some new member has to avoid.  Branch
    ``i`` adds candidate ``i`` and forbids candidates ``0..i-1``.

    Restricting to antichains loses nothing: the minimal members of a
    compatible family form a compatible family with the same transversal
    number.  ``on_family`` is called with the member list at every node.
    """
    U = sorted(set(universe), key=lambda m: (m.bit_count(), lex_key(m)))
    N = len(U)
    if any(m == 0 for m in U):
        raise ValueError("universe contains the empty set")
    if k <= 0:
        return []
    budget = budget or Budget()
    comparable = []
    for i, a in enumerate(U):
        c = 1 << i
        for j, b in enumerate(U):
            if a & b == a or a & b == b:
                c |= 1 << j
        comparable.append(c)

    def candidates(pred, forbidden):
        return [c for c in range(N) if not forbidden >> c & 1 and pred(U[c])]

    def rec(members: list[int], forbidden: int):
        budget.tick()
        fam = [U[i] for i in members]
        if on_family is not None:
            on_family(fam)
        best = None
        for a, b in combinations(fam, 2):
            for x in bits(a & b):
                t = (a | b) & ~(1 << x)
                if any(m & ~t == 0 for m in fam):
                    continue
                cands = candidates(lambda m: m & ~t == 0, forbidden)
                if not cands:
                    return None
                if best is None or len(cands) < len(best):
                    best = cands
        if best is None:
            tr = min_transversal(fam)
            if tr.size >= k:
                return fam
            T = tr.witness
            best = candidates(lambda m: not m & T, forbidden)
            if not best:
                return None
        excl = 0
        for c in best:
            res = rec(members + [c], forbidden | excl | comparable[c])
            if res is not None:
                return res
            excl |= 1 << c
        return None

    return rec([], 0)


@dataclass(frozen=True)
class YResult:
    value: int
    witness: FortCollection
    proven: bool
    nodes: int = 0

    def to_json(self, offset: int = 0) -> dict:
        return {"Y": self.value, "proven": self.proven, "witness_family": self.witness.as_lists(offset)}


def y_number(G: Graph, max_nodes: int | None = None, time_limit: float | None = None,
             on_family: Callable[[list[int]], None] | None = None) -> YResult:
    """Fort transversal number: the largest transversal number of a compatible family of forts.

    Bracketed below by the fort number (disjoint forts are compatible) and
    above by Z(G).  If the minimal forts are compatible the answer is Z(G)
    at once.  Otherwise targets ``k`` above the best known value are tried
    until the search proves one infeasible.  Budget exhaustion returns the
    best family found with ``proven=False``.
    """
    require_search_size(G)
    Z, _ = zero_forcing_number(G)
    mins = minimal_forts(G)
    if compatibility(mins):
        return YResult(Z, mins, True)
    ft, packing = fort_number(G)
    best = FortCollection.from_sets(G.n, packing)
    value = ft
    universe = all_forts(G).masks
    budget = Budget(max_nodes, time_limit)
    while value < Z:
        try:
            fam = find_compatible_family(universe, value + 1, budget, on_family)
        except BudgetExhausted:
            return YResult(value, best, False, budget.nodes)
        if fam is None:
            return YResult(value, best, True, budget.nodes)
        best = FortCollection(G.n, tuple(fam))
        value = min_transversal(fam).size
    return YResult(value, best, True, budget.nodes)


# the bound chain

@dataclass
class BoundChain:
    ft: int
    N_lower: int
    Y: int
    Y_proven: bool
    Z: int
    witnesses: dict = field(default_factory=dict)

    def consistent(self) -> bool:
        if self.Y_proven:
            return self.ft <= self.N_lower <= self.Y <= self.Z
        return self.ft <= self.N_lower <= self.Z and self.Y <= self.Z

    def to_json(self, offset: int = 0) -> dict:
        w = self.witnesses
        return {
            "chain": {"ft": self.ft, "N_lower": self.N_lower, "Y": self.Y, "Y_proven": self.Y_proven, "Z": self.Z},
            "witness": {
                "ft": [sorted(v + offset for v in f) for f in w["ft"]],
                "Z": sorted(v + offset for v in w["Z"]),
                "Y": w["Y"].as_lists(offset),
                "N_lower": w["N_lower"],
            },
        }


def bound_chain(G: Graph, max_nodes: int | None = None, time_limit: float | None = None,
                extra_matrices=()) -> BoundChain:
    """``ft <= N_lower <= Y <= Z`` with witnesses.

    ``N_lower`` is the largest nullity among: the fort number, the matrix
    built on the fort packing, and any ``extra_matrices`` in csym(G).
    """
    from .construct import ConstructionSpec, build_csym_disjoint
    from .exact import in_csym, nullity

    ft, packing = fort_number(G)
    Z, zw = zero_forcing_number(G)
    y = y_number(G, max_nodes, time_limit)
    n_lower, n_src = ft, "fort_number"
    if packing:
        A = build_csym_disjoint(ConstructionSpec(G, tuple(packing)))
        if nullity(A) > n_lower:
            n_lower, n_src = nullity(A), "csym construction on the fort packing"
    for k, A in enumerate(extra_matrices):
        if not in_csym(A, G):
            raise ValueError(f"extra matrix {k} is not in csym(G)")
        if nullity(A) > n_lower:
            n_lower, n_src = nullity(A), f"extra matrix {k}"
    chain = BoundChain(ft, n_lower, y.value, y.proven, Z,
                       {"ft": packing, "Z": zw, "Y": y.witness, "N_lower": n_src})
    if not chain.consistent():
        raise AssertionError(f"bound chain violated: {chain}")
    return chain


# the Petersen audit

def propagate_obligations(universe: Iterable[int], seed: Iterable[int]) -> dict:
    """Close ``seed`` under exchange obligations that have a unique candidate in ``universe``.

    Works in rounds.  Each round records every unmet obligation of the
    current family with its candidates, adds all uniquely forced members,
    and notes obligations with no candidate at all as contradictions.
    """
    U = sorted(set(universe), key=lex_key)
    fam = sorted(set(seed), key=lex_key)
    log = []
    while True:
        added = []
        for a, b in combinations(fam, 2):
            for x in bits(a & b):
                t = (a | b) & ~(1 << x)
                if any(m & ~t == 0 for m in fam):
                    continue
                cands = [m for m in U if m & ~t == 0]
                log.append({"F1": bits(a), "F2": bits(b), "x": x, "candidates": [bits(c) for c in cands],
                            "outcome": "contradiction" if not cands else "forced" if len(cands) == 1 else "open"})
                if len(cands) == 1 and cands[0] not in fam and cands[0] not in added:
                    added.append(cands[0])
        if not added or any(e["outcome"] == "contradiction" for e in log):
            break
        fam = sorted(set(fam) | set(added), key=lex_key)
    return {"family": [bits(m) for m in fam], "log": log,
            "contradiction": any(e["outcome"] == "contradiction" for e in log)}


def exhaustive_compatible_taus(forts: list[int], n: int, max_tau: int | None = None) -> dict:
    """Scan all ``2**len(forts)`` subfamilies with numpy bit operations.

    Returns counts of compatible subfamilies by transversal number.  A
    subfamily ``S`` has transversal number at least ``k`` iff for every
    vertex set ``T`` of size ``k-1`` it contains a member missing ``T``.
    """
    import numpy as np

    m = len(forts)
    if m > 24:
        raise ValueError("exhaustive scan limited to 24 sets")
    S = np.arange(1 << m, dtype=np.uint32)
    compatible = np.ones(1 << m, dtype=bool)
    for i, j in combinations(range(m), 2):
        a, b = forts[i], forts[j]
        both = ((S >> i) & 1 & (S >> j) & 1).astype(bool)
        for x in bits(a & b):
            t = (a | b) & ~(1 << x)
            req = sum(1 << k for k, c in enumerate(forts) if c & ~t == 0)
            compatible &= ~(both & ((S & np.uint32(req)) == 0))
    if max_tau is None:
        max_tau = min_transversal(forts).size if forts else 0
    tau = np.zeros(1 << m, dtype=np.int8)
    for k in range(1, max_tau + 1):
        ok = np.ones(1 << m, dtype=bool)
        for T in combinations(range(n), k - 1):
            tm = sum(1 << v for v in T)
            miss = sum(1 << idx for idx, c in enumerate(forts) if not c & tm)
            ok &= (S & np.uint32(miss)) != 0
        tau[ok] = k
    hist = {}
    for k in range(max_tau + 1):
        hist[k] = int(np.count_nonzero(compatible & (tau == k)))
    return {"subfamilies": 1 << m, "compatible": int(np.count_nonzero(compatible)), "by_tau": hist,
            "max_tau": max(k for k, c in hist.items() if c)}


def petersen_incompatibility_audit() -> dict:
    """Certify that no compatible family of minimal Petersen forts has transversal number 5."""
    from .graph import petersen

    P = petersen()
    forts = list(minimal_forts(P).masks)
    scan = exhaustive_compatible_taus(forts, P.n)
    search = find_compatible_family(forts, 5)
    outer = to_mask(range(5))
    private = [m for m in forts if (m & outer).bit_count() == 1]
    trace = propagate_obligations(forts, private)
    full = compatibility(forts)
    return {
        "confirmed": scan["by_tau"].get(5, 0) == 0 and search is None,
        "scan": scan,
        "backtracking_found": None if search is None else [bits(m) for m in search],
        "full_family_violation": full.to_json()["violation"],
        "trace_seed": [bits(m) for m in sorted(private, key=lex_key)],
        "trace": trace,
    }
