"""Bitset graph representation, graph6 codec, and elementary builders.

Vertices are 0-based contiguous integers.  A vertex set is a plain int
bitmask; ``adj[v]`` is the open-neighborhood mask of ``v``.  Graphs are
immutable after construction, so they can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 62  # single-byte graph6 order form

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Raised on malformed graph6 input; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as symmetric bitset adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order must be in [1, {MAX_ORDER}], got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        universe = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~universe:
                raise ValueError(f"adjacency row {v} uses bits beyond order")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.adj[u] >> v & 1) != (self.adj[v] >> u & 1):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def universe(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for order {self.n}")


def closed_neighborhood(g: Graph, v: int) -> int:
    """N[v] as a bitmask."""
    g._check_vertex(v)
    return g.adj[v] | (1 << v)


def closed_neighborhood_of_set(g: Graph, vset: int) -> int:
    """N[D] as a bitmask, for a vertex-set bitmask D."""
    if vset & ~g.universe:
        raise ValueError("vertex set uses bits beyond the graph order")
    out = 0
    rest = vset
    while rest:
        v = (rest & -rest).bit_length() - 1
        out |= g.adj[v] | (1 << v)
        rest &= rest - 1
    return out


def mask_to_vertices(mask: int) -> list[int]:
    """Sorted vertex list of a bitmask."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def vertices_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# ---------------------------------------------------------------------------
# builders


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with exactly the given edge list."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop request at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for order {n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    universe = (1 << n) - 1
    return Graph(n, tuple(universe & ~(1 << v) for v in range(n)))


def star(n: int) -> Graph:
    """K_{1,n-1} with the center at vertex 0."""
    if n == 1:
        return empty(1)
    return from_edges(n, [(0, v) for v in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def add_edge(g: Graph, u: int, v: int, strict: bool = False) -> Graph:
    if u == v:
        raise ValueError(f"self-loop request at vertex {u}")
    g._check_vertex(u)
    g._check_vertex(v)
    if g.has_edge(u, v):
        if strict:
            raise ValueError(f"edge ({u},{v}) already present")
        return g
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    g._check_vertex(u)
    g._check_vertex(v)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def with_isolated(g: Graph, t: int) -> Graph:
    """``g`` plus ``t`` extra isolated vertices."""
    if t < 0:
        raise ValueError("isolated vertex count must be nonnegative")
    if t == 0:
        return g
    return Graph(g.n + t, g.adj + (0,) * t)


def complement(g: Graph) -> Graph:
    universe = g.universe
    return Graph(g.n, tuple((universe & ~row) & ~(1 << v) for v, row in enumerate(g.adj)))


# ---------------------------------------------------------------------------
# graph6 codec (single-byte order form, n <= 62)


def to_graph6(g: Graph) -> str:
    """Encode the labeled graph as a graph6 line (no trailing newline)."""
    if g.n > MAX_ORDER:
        raise ValueError(f"graph6 single-byte form supports n <= {MAX_ORDER}")
    bits = []
    for col in range(1, g.n):
        for row in range(col):
            bits.append(g.adj[row] >> col & 1)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional '>>graph6<<' header allowed)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 line", 0)
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("multi-byte order form not supported (n > 62)", 0)
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid order byte {s[0]!r}", 0)
    n = first - 63
    if n < 1:
        raise Graph6Error("graph6 order 0 not supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1 : 1 + nbytes]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated graph6 body, expected {nbytes} bytes", len(s))
    if len(s) > 1 + nbytes:
        raise Graph6Error("trailing garbage after graph6 body", 1 + nbytes)
    bits = []
    for i, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"invalid graph6 byte {ch!r}", 1 + i)
        for shift in range(5, -1, -1):
            bits.append(val >> shift & 1)
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", 1 + nbytes - 1)
    adj = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            idx += 1
    return Graph(n, tuple(adj))
