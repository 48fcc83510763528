"""Standard zero forcing: closure under the colour change rule and Z(G)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, bits, mask_set, require_search_size, to_mask


@dataclass(frozen=True)
class ColoringState:
    filled: int
    force_log: tuple[tuple[int, int], ...] = field(default=())

    @property
    def filled_set(self) -> frozenset[int]:
        return mask_set(self.filled)


def forcing_closure(G: Graph, B) -> ColoringState:
    """Apply the colour change rule until nothing changes.

    A filled vertex with exactly one unfilled neighbour forces it.  Vertices
    are scanned in increasing order each round, so the log is deterministic.
    """
    filled = G.check_vertices(to_mask(B))
    log = []
    changed = True
    while changed:
        changed = False
        for v in bits(filled):
            out = G.adj[v] & ~filled
            if out and out & (out - 1) == 0:
                filled |= out
                log.append((v, out.bit_length() - 1))
                changed = True
    return ColoringState(filled, tuple(log))


def _closure_mask(adj, filled: int) -> int:
    changed = True
    while changed:
        changed = False
        f = filled
        while f:
            low = f & -f
            f ^= low
            out = adj[low.bit_length() - 1] & ~filled
            if out and out & (out - 1) == 0:
                filled |= out
                changed = True
    return filled


def is_zfs(G: Graph, B) -> bool:
    return _closure_mask(G.adj, G.check_vertices(to_mask(B))) == G.vertices


def zero_forcing_number(G: Graph) -> tuple[int, frozenset[int]]:
    """Exact Z(G) with the lexicographically first minimum zero forcing set."""
    require_search_size(G)
    full = G.vertices
    for k in range(G.n + 1):
        for combo in combinations(range(G.n), k):
            m = 0
            for v in combo:
                m |= 1 << v
            if _closure_mask(G.adj, m) == full:
                return k, frozenset(combo)
    raise AssertionError("unreachable: V(G) is always zero forcing")


def replay_forces(G: Graph, B, force_log) -> int:
    """Check that ``force_log`` is a valid chronology from ``B``; return the filled mask."""
    filled = to_mask(B)
    for u, w in force_log:
        if not filled >> u & 1:
            raise ValueError(f"forcer {u} is not filled")
        if filled >> w & 1:
            raise ValueError(f"vertex {w} is already filled")
        if G.adj[u] & ~filled != 1 << w:
            raise ValueError(f"{w} is not the unique unfilled neighbour of {u}")
        filled |= 1 << w
    return filled
