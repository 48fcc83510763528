"""Cross graphs between forts, simple cycles, and zero-sum flows on bipartite graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import fraction_str, kernel
from .forts import CapExceeded
from .graph import Graph, bits, bridges, components, is_bipartite, to_mask

DEFAULT_CYCLE_CAP = 10**4


@dataclass(frozen=True)
class CrossGraph:
    """Edges of ``G`` running between two disjoint vertex sets.

    ``graph`` keeps the vertex ids of ``G``; vertices outside ``part1 | part2``
    are isolated in it.
    """

    graph: Graph
    part1: frozenset[int]
    part2: frozenset[int]


def cross_bipartite(G: Graph, F1, F2) -> CrossGraph:
    a, b = G.check_vertices(to_mask(F1)), G.check_vertices(to_mask(F2))
    if a & b:
        raise ValueError(f"sets overlap in {bits(a & b)}")
    edges = [(u, v) for u, v in G.edges() if (a >> u & 1 and b >> v & 1) or (b >> u & 1 and a >> v & 1)]
    return CrossGraph(Graph.from_edges(G.n, edges), frozenset(bits(a)), frozenset(bits(b)))


def enumerate_simple_cycles(G: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[tuple[int, ...]]:
    """All simple cycles of an undirected graph, each listed once.

    A cycle is written starting at its smallest vertex and oriented so the
    second vertex is smaller than the last.  Output is sorted by length,
    then lexicographically.  Search from each start ``s`` only walks through
    vertices larger than ``s``, so every cycle is found from its minimum.
    """
    out: list[tuple[int, ...]] = []
    for s in range(G.n):
        allowed = G.vertices & ~((1 << (s + 1)) - 1)
        path = [s]
        onpath = 1 << s
        stack = [iter(bits(G.adj[s] & allowed))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                onpath &= ~(1 << path.pop())
                continue
            path.append(nxt)
            onpath |= 1 << nxt
            if len(path) >= 3 and G.adj[nxt] >> s & 1 and path[1] < nxt:
                out.append(tuple(path))
                if len(out) > cap:
                    raise CapExceeded("enumerate_simple_cycles", cap, len(out))
            stack.append(iter(bits(G.adj[nxt] & allowed & ~onpath)))
    out.sort(key=lambda c: (len(c), c))
    return out


def cycle_edges(c: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(min(c[i], c[(i + 1) % len(c)]), max(c[i], c[(i + 1) % len(c)])) for i in range(len(c))]


@dataclass(frozen=True)
class FlowAssignment:
    """Nonzero edge weights with every vertex sum equal to zero."""

    weights: dict  # (u, v) with u < v -> Fraction

    def vertex_sums(self, n: int) -> list[Fraction]:
        s = [Fraction(0)] * n
        for (u, v), w in self.weights.items():
            s[u] += w
            s[v] += w
        return s

    def is_valid(self, G: Graph) -> bool:
        return (set(self.weights) == set(G.edges())
                and all(w != 0 for w in self.weights.values())
                and all(x == 0 for x in self.vertex_sums(G.n)))

    def to_json(self, offset: int = 0) -> dict:
        return {"edges": [[u + offset, v + offset, fraction_str(w)] for (u, v), w in sorted(self.weights.items())],
                "verified": True}


@dataclass(frozen=True)
class Bridge:
    """A bridge certifying that no zero-sum flow exists."""

    edge: tuple[int, int]

    def to_json(self, offset: int = 0) -> dict:
        return {"bridge": [self.edge[0] + offset, self.edge[1] + offset]}


def zero_sum_flow(G: Graph, cap: int = DEFAULT_CYCLE_CAP) -> FlowAssignment | Bridge:
    """Zero-sum flow on a bipartite graph, or the first bridge if there is one.

    Cycle ``i`` (1-based, in the canonical cycle order) contributes
    ``+-1/2**i`` alternately around its edges, starting with ``+`` on its
    lexicographically smallest edge.  The first cycle through an edge dominates
    all later contributions, so every summed weight is nonzero.
    """
    if is_bipartite(G) is None:
        raise ValueError("zero_sum_flow is defined here for bipartite graphs only")
    br = bridges(G)
    if br:
        return Bridge(br[0])
    weights: dict[tuple[int, int], Fraction] = {e: Fraction(0) for e in G.edges()}
    i = 0
    for comp in components(G):
        if comp.bit_count() < 2:
            continue
        sub_edges = [e for e in G.edges() if comp >> e[0] & 1]
        H = Graph.from_edges(G.n, sub_edges)
        for c in enumerate_simple_cycles(H, cap):
            i += 1
            es = cycle_edges(c)
            start = es.index(min(es))
            w = Fraction(1, 2**i)
            for k in range(len(es)):
                e = es[(start + k) % len(es)]
                weights[e] += w if k % 2 == 0 else -w
    flow = FlowAssignment(weights)
    if not flow.is_valid(G):
        raise AssertionError("constructed flow failed verification")
    return flow


def incidence_rows(G: Graph) -> list[list[Fraction]]:
    """Vertex-by-edge incidence matrix, edges in lexicographic order."""
    es = G.edges()
    return [[Fraction(1) if v in e else Fraction(0) for e in es] for v in range(G.n)]


def bridge_forced_zero(G: Graph, e) -> bool:
    """True iff every edge weighting with zero vertex sums (zeros allowed) vanishes on ``e``."""
    if is_bipartite(G) is None:
        raise ValueError("graph is not bipartite")
    e = (min(e), max(e))
    es = G.edges()
    if e not in es:
        raise ValueError(f"{e} is not an edge")
    k = es.index(e)
    return all(x[k] == 0 for x in kernel(incidence_rows(G), len(es)))
