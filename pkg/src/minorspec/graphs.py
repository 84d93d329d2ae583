"""Immutable small graphs (up to 64 vertices) backed by per-vertex adjacency bit masks.

Vertices are integers 0..n-1.  Row i is an int whose bit j is set iff ij is an
edge.  All operations return new graphs; values are safe to share across
threads and to use as dict keys.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 64


class CapacityError(ValueError):
    """Raised when a construction would exceed the 64-vertex capacity."""


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        if n < 0 or n > MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {i} has bits at or beyond vertex {n}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
        for i, row in enumerate(rows):
            for j in bits(row):
                if not rows[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.edge_count()})"

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, [0] * n)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                yield (u, v)

    def full_mask(self) -> int:
        return (1 << self.n) - 1


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n > MAX_VERTICES:
        raise CapacityError(f"K_{n} exceeds {MAX_VERTICES} vertices")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << i) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    """Complete bipartite graph K_{m,n}; the m-part takes indices 0..m-1."""
    if m + n > MAX_VERTICES:
        raise CapacityError(f"K_{{{m},{n}}} exceeds {MAX_VERTICES} vertices")
    left = (1 << m) - 1
    right = ((1 << n) - 1) << m
    return Graph(m + n, [right] * m + [left] * n)


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; g keeps its indices, h is shifted up by |g|."""
    if g.n + h.n > MAX_VERTICES:
        raise CapacityError(f"union on {g.n}+{h.n} vertices exceeds {MAX_VERTICES}")
    return Graph(g.n + h.n, list(g.adj) + [row << g.n for row in h.adj])


def k_copies(g: Graph, k: int) -> Graph:
    """Union of k disjoint copies of g."""
    if k < 0:
        raise ValueError("copy count must be non-negative")
    if k * g.n > MAX_VERTICES:
        raise CapacityError(f"{k} copies of {g.n} vertices exceed {MAX_VERTICES}")
    adj: list[int] = []
    for i in range(k):
        adj.extend(row << (i * g.n) for row in g.adj)
    return Graph(k * g.n, adj)


def join(g: Graph, h: Graph) -> Graph:
    """Join: disjoint union plus all edges between the two sides."""
    if g.n + h.n > MAX_VERTICES:
        raise CapacityError(f"join on {g.n}+{h.n} vertices exceeds {MAX_VERTICES}")
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    adj = [row | hmask for row in g.adj]
    adj += [(row << g.n) | gmask for row in h.adj]
    return Graph(g.n + h.n, adj)


def complement(g: Graph) -> Graph:
    full = g.full_mask()
    return Graph(g.n, [full ^ row ^ (1 << i) for i, row in enumerate(g.adj)])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) already present")
    if u == v:
        raise ValueError("cannot add a loop")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, adj)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def subdivide_min_edge(g: Graph) -> Graph:
    """Subdivide the edge uv minimizing d(u)+d(v); the new vertex becomes index n.

    Ties broken by lexicographically smallest (min(u,v), max(u,v)).
    """
    if g.edge_count() == 0:
        raise ValueError("cannot subdivide an edgeless graph")
    if g.n >= MAX_VERTICES:
        raise CapacityError("subdivision would exceed capacity")
    deg = g.degrees()
    best = min(g.edges(), key=lambda e: (deg[e[0]] + deg[e[1]], e[0], e[1]))
    u, v = best
    z = g.n
    adj = [row for row in g.adj] + [0]
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    adj[u] |= 1 << z
    adj[v] |= 1 << z
    adj[z] = (1 << u) | (1 << v)
    return Graph(g.n + 1, adj)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract edge uv: merge the two endpoints, dropping loops and multi-edges.

    The merged vertex sits at min(u,v)'s slot; vertices above max(u,v) shift
    down by one.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    lo, hi = min(u, v), max(u, v)
    merged = (g.adj[u] | g.adj[v]) & ~(1 << u) & ~(1 << v)
    rows = []
    for i in range(g.n):
        if i == hi:
            continue
        row = merged if i == lo else g.adj[i]
        if i != lo and row >> hi & 1:
            row = (row & ~(1 << hi)) | (1 << lo)
        low_part = row & ((1 << hi) - 1)
        rows.append(low_part | (row >> (hi + 1)) << hi)
    return Graph(g.n - 1, rows)


def induced(g: Graph, vertex_mask: int) -> Graph:
    """Induced subgraph on the masked vertices, relabeled in ascending order."""
    if vertex_mask & ~g.full_mask():
        raise ValueError("vertex mask has bits beyond the graph")
    keep = list(bits(vertex_mask))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for w in bits(g.adj[v] & vertex_mask):
            row |= 1 << pos[w]
        adj.append(row)
    return Graph(len(keep), adj)


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ascending by minimum vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = g.adj[v] & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Non-increasing degree sequence."""
    return tuple(sorted(g.degrees(), reverse=True))


# ---------------------------------------------------------------------------
# graph6 (McKay's format): size field, then upper-triangle bits in column-major
# order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed 6 per character, each +63.
# ---------------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        head = "~" + "".join(
            chr(((g.n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    body = []
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                body.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        body.append(chr((acc << (6 - nbits)) + 63))
    return head + "".join(body)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string; rejects malformed input including padding junk."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise ValueError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    if vals[0] == 63:  # '~' prefix: 18-bit size
        if len(vals) < 4:
            raise ValueError("truncated graph6 size field")
        if vals[1] == 63:
            raise ValueError("graph6 sizes beyond 18 bits unsupported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        data = vals[4:]
    else:
        n = vals[0]
        data = vals[1:]
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 encodes {n} vertices, capacity {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(data) != want:
        raise ValueError(f"graph6 body has {len(data)} characters, expected {want}")
    bitstream = 0
    for v in data:
        bitstream = (bitstream << 6) | v
    total = 6 * len(data)
    if total > nbits and bitstream & ((1 << (total - nbits)) - 1):
        raise ValueError("nonzero padding bits in graph6 body")
    adj = [0] * n
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if bitstream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, adj)
