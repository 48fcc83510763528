"""Exact minimum transversals (hitting sets) by branch and bound on bitmasks."""

from __future__ import annotations

from dataclasses import dataclass

from .family import FortCollection, as_masks, minimal_masks
from .graph import bits, lex_key, mask_set


@dataclass(frozen=True)
class TransversalResult:
    size: int
    witness: int  # bitmask
    proven_optimal: bool = True

    @property
    def vertices(self) -> frozenset[int]:
        return mask_set(self.witness)

    def to_json(self, offset: int = 0) -> dict:
        return {"tau": self.size, "witness": [v + offset for v in bits(self.witness)],
                "optimal": self.proven_optimal}


def minimal_sets(family) -> FortCollection:
    """Inclusion-minimal members of ``family``."""
    masks = as_masks(family)
    n = family.ground_n if isinstance(family, FortCollection) else max((m.bit_length() for m in masks), default=0)
    return FortCollection(n, tuple(minimal_masks(masks)), "minimal")


def hits_all(T: int, masks) -> bool:
    return all(T & m for m in masks)


def _greedy_hitting(sets: list[int]) -> int:
    T = 0
    unhit = list(sets)
    while unhit:
        counts: dict[int, int] = {}
        for s in unhit:
            for v in bits(s):
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda u: (-counts[u], u))
        T |= 1 << v
        unhit = [s for s in unhit if not s >> v & 1]
    return T


def _packing_bound(sets: list[int]) -> int:
    used = 0
    k = 0
    for s in sorted(sets, key=lambda m: (m.bit_count(), lex_key(m))):
        if not s & used:
            used |= s
            k += 1
    return k


def min_transversal(family, allowed: int | None = None) -> TransversalResult:
    """Minimum hitting set of ``family``.

    ``allowed`` restricts the elements that may be used (a bitmask); a
    ``ValueError`` is raised when some member cannot be hit at all.
    Branching is on the smallest unhit set, elements tried in order of
    descending hit count; the lower bound is a greedy disjoint packing.
    """
    masks = as_masks(family)
    if any(m == 0 for m in masks):
        raise ValueError("family contains the empty set; transversal number undefined")
    if allowed is not None:
        masks = [m & allowed for m in masks]
        if any(m == 0 for m in masks):
            raise ValueError("some member has no allowed element")
    sets = minimal_masks(masks)
    if not sets:
        return TransversalResult(0, 0)

    best_T = _greedy_hitting(sets)
    best = best_T.bit_count()

    def search(chosen: int, k: int, live: list[int]):
        nonlocal best, best_T
        unhit = [s for s in live if not s & chosen]
        if not unhit:
            if k < best:
                best, best_T = k, chosen
            return
        if k + _packing_bound(unhit) >= best:
            return
        pivot = min(unhit, key=lambda m: (m.bit_count(), lex_key(m)))
        counts = {v: sum(1 for s in unhit if s >> v & 1) for v in bits(pivot)}
        order = sorted(counts, key=lambda v: (-counts[v], v))
        banned = 0
        for v in order:
            rest = [s & ~banned for s in unhit]
            if any(s == 0 for s in rest):
                return
            search(chosen | 1 << v, k + 1, rest)
            banned |= 1 << v

    search(0, 0, sets)
    return TransversalResult(best, best_T)


def tau(family) -> int:
    return min_transversal(family).size
