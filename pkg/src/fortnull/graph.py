"""Simple undirected graphs stored as bitset adjacency rows.

Vertex sets are passed around as Python ints used as bitmasks (bit ``v`` set
means vertex ``v`` is in the set).  Public functions also accept any iterable
of vertex ids and convert with :func:`to_mask`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

SEARCH_LIMIT = 64  # largest n accepted by the exponential search routines


def to_mask(vertices) -> int:
    """Convert an int bitmask or an iterable of vertex ids into a bitmask."""
    if isinstance(vertices, int):
        if vertices < 0:
            raise ValueError("negative bitmask")
        return vertices
    m = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex id {v}")
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Vertex ids contained in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def lex_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  ``labels`` are
    optional external names, carried along for output only.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count differs from n")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count differs from n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), None if labels is None else tuple(str(x) for x in labels))

    @property
    def vertices(self) -> int:
        """Mask of all vertices."""
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def check_vertices(self, mask: int) -> int:
        if mask >> self.n:
            raise ValueError(f"vertex set {bits(mask)} has ids outside 0..{self.n - 1}")
        return mask

    def to_json(self) -> dict:
        out = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, obj: dict, one_based: bool = False) -> "Graph":
        off = 1 if one_based else 0
        edges = [(u - off, v - off) for u, v in obj["edges"]]
        return cls.from_edges(int(obj["n"]), edges, obj.get("labels"))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def require_search_size(G: Graph) -> None:
    if G.n > SEARCH_LIMIT:
        raise ValueError(f"search routines support n <= {SEARCH_LIMIT}, got n={G.n}")


# graph6

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def encode_graph6(G: Graph) -> str:
    bitlist = [1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    body = "".join(
        chr(int("".join(map(str, bitlist[k:k + 6])), 2) + 63) for k in range(0, len(bitlist), 6)
    )
    return _encode_n(G.n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 token (an optional ``>>graph6<<`` header is allowed)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 input")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"character {ch!r} outside the graph6 alphabet")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            if len(vals) < 8:
                raise ValueError("truncated graph6 length header")
            head, rest = vals[2:8], vals[8:]
        else:
            if len(vals) < 4:
                raise ValueError("truncated graph6 length header")
            head, rest = vals[1:4], vals[4:]
        n = 0
        for x in head:
            n = (n << 6) | x
    else:
        n, rest = vals[0], vals[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(rest) < need:
        raise ValueError(f"graph6 body too short: expected {need} bytes, got {len(rest)}")
    if len(rest) > need:
        raise ValueError(f"trailing bytes after graph6 body ({len(rest) - need} extra)")
    stream = []
    for x in rest:
        stream.extend((x >> s) & 1 for s in range(5, -1, -1))
    if any(stream[nbits:]):
        raise ValueError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# generators

def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be >= 0")
    return Graph.from_edges(n, [])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite(*sizes: int) -> Graph:
    """Parts are numbered consecutively: part 0 is ``0..sizes[0]-1`` and so on."""
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("complete_multipartite needs part sizes >= 1")
    part = [p for p, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if part[i] != part[j]])


def petersen() -> Graph:
    """Outer cycle 0-4, spokes i to i+5, inner pentagram 5-7-9-6-8."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return Graph.from_edges(10, outer + spokes + inner)


def corona_k1(G: Graph) -> Graph:
    """Attach a pendant vertex ``v + n`` to every vertex ``v``."""
    n = G.n
    return Graph.from_edges(2 * n, G.edges() + [(v, v + n) for v in range(n)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for H in graphs:
        edges += [(u + off, v + off) for u, v in H.edges()]
        off += H.n
    return Graph.from_edges(off, edges)


_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_multipartite": complete_multipartite,
    "petersen": petersen,
    "corona_k1": corona_k1,
    "disjoint_union": disjoint_union,
    "empty": empty,
}


def generate(family: str, *params) -> Graph:
    """Dispatch to a named generator, e.g. ``generate("cycle", 5)``."""
    try:
        fn = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown graph family {family!r}") from None
    return fn(*params)


# structure

def induced_subgraph(G: Graph, S) -> tuple[Graph, list[int]]:
    """Return ``(G[S], index_map)`` where ``index_map[i]`` is the original id of new vertex ``i``."""
    mask = G.check_vertices(to_mask(S))
    idx = bits(mask)
    pos = {v: i for i, v in enumerate(idx)}
    edges = [(pos[u], pos[v]) for u, v in G.edges() if u in pos and v in pos]
    labels = None if G.labels is None else [G.labels[v] for v in idx]
    return Graph.from_edges(len(idx), edges, labels), idx


def components(G: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by smallest vertex."""
    seen, comps = 0, []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def bridges(G: Graph) -> list[tuple[int, int]]:
    """Cut edges of ``G`` via iterative lowpoint DFS, sorted lexicographically."""
    disc = [-1] * G.n
    low = [0] * G.n
    out = []
    t = 0
    for root in range(G.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(G.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(G.neighbors(w))))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.append((min(v, parent), max(v, parent)))
    return sorted(out)


def is_bipartite(G: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-colouring ``(S1, S2)`` found by BFS, or ``None`` for odd cycles.

    The smallest vertex of every component goes into ``S1``.
    """
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in G.neighbors(v):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    q.append(w)
                elif color[w] == color[v]:
                    return None
    return (frozenset(v for v in range(G.n) if color[v] == 0),
            frozenset(v for v in range(G.n) if color[v] == 1))
