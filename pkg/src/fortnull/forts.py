"""Forts: recognition, enumeration, minimal forts, packings and separation."""

from __future__ import annotations

from .family import FortCollection, minimal_masks
from .graph import Graph, bits, lex_key, require_search_size, to_mask

DEFAULT_FORT_CAP = 10**6


class CapExceeded(RuntimeError):
    """An enumeration produced more objects than the caller allowed."""

    def __init__(self, what: str, cap: int, partial: int):
        super().__init__(f"{what}: cap of {cap} exceeded (found at least {partial})")
        self.cap = cap
        self.partial = partial


def _is_fort_mask(G: Graph, F: int) -> bool:
    if not F:
        return False
    for v in bits(G.vertices & ~F):
        if (G.adj[v] & F).bit_count() == 1:
            return False
    return True


def is_fort(G: Graph, F) -> bool:
    """True iff ``F`` is nonempty and no outside vertex has exactly one neighbour in it."""
    return _is_fort_mask(G, G.check_vertices(to_mask(F)))


def all_forts(G: Graph, cap: int = DEFAULT_FORT_CAP) -> FortCollection:
    """Every fort of ``G``, by include/exclude backtracking over the vertices.

    Vertices are decided in descending degree order.  A branch dies as soon as
    an excluded vertex has exactly one included neighbour and no undecided
    neighbour left to change that.
    """
    require_search_size(G)
    n = G.n
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    adj = G.adj
    found: list[int] = []

    def dead(v: int, inside: int, undecided: int) -> bool:
        return (adj[v] & inside).bit_count() == 1 and not adj[v] & undecided

    def rec(i: int, inside: int, outside: int, undecided: int):
        if i == n:
            if inside:
                found.append(inside)
                if len(found) > cap:
                    raise CapExceeded("all_forts", cap, len(found))
            return
        v = order[i]
        und = undecided & ~(1 << v)
        # watch list: v itself and excluded neighbours of v
        for inc in (True, False):
            ins = inside | (1 << v) if inc else inside
            out = outside if inc else outside | (1 << v)
            watch = adj[v] & out
            if not inc:
                watch |= 1 << v
            if any(dead(w, ins, und) for w in bits(watch)):
                continue
            rec(i + 1, ins, out, und)

    rec(0, 0, 0, G.vertices)
    return FortCollection(n, tuple(found), "all")


def minimal_forts(G: Graph, cap: int = DEFAULT_FORT_CAP) -> FortCollection:
    return FortCollection(G.n, tuple(minimal_masks(all_forts(G, cap).masks)), "minimal")


def fort_number(G: Graph, cap: int = DEFAULT_FORT_CAP) -> tuple[int, list[frozenset[int]]]:
    """Maximum number of pairwise disjoint forts, with a witness packing.

    Only minimal forts are packed: shrinking each fort of a packing to a
    minimal fort inside it keeps the packing disjoint.
    """
    forts = list(minimal_forts(G, cap).masks)
    forts.sort(key=lambda m: (m.bit_count(), lex_key(m)))
    smallest = forts[0].bit_count() if forts else 1
    best: list[int] = []

    def rec(start: int, used: int, chosen: list[int]):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        free = (G.vertices & ~used).bit_count()
        if len(chosen) + free // smallest <= len(best):
            return
        for i in range(start, len(forts)):
            f = forts[i]
            if not f & used:
                chosen.append(f)
                rec(i + 1, used | f, chosen)
                chosen.pop()

    rec(0, 0, [])
    witness = sorted(best, key=lex_key)
    return len(witness), [frozenset(bits(f)) for f in witness]


def separated(G: Graph, F1, F2) -> bool:
    """True iff the disjoint forts ``F1`` and ``F2`` have no edge between them."""
    a, b = G.check_vertices(to_mask(F1)), G.check_vertices(to_mask(F2))
    for F in (a, b):
        if not _is_fort_mask(G, F):
            raise ValueError(f"{bits(F)} is not a fort")
    if a & b:
        raise ValueError("forts are not disjoint")
    return not any(G.adj[v] & b for v in bits(a))
