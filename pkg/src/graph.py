"""graph.py"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from utils import iter_bits, to_bits

# Largest vertex count the library accepts. Rows are plain int bitsets.
MAXN = 12

# graph6 single-byte size form covers 0..62
_G6_SMALL = 62
_G6_BIAS = 63

VertexSet = int
"""Bitset over the vertex indices of one specific Graph."""


class Graph6Error(ValueError):
    """Base class for graph6 decoding/encoding problems."""


class MalformedHeaderError(Graph6Error):
    pass


class CharacterRangeError(Graph6Error):
    pass


class GraphTooLargeError(Graph6Error):
    pass


class MalformedBodyError(Graph6Error):
    pass


class Edge(NamedTuple):
    """Unordered vertex pair, stored with u < v."""
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        if a == b:
            raise ValueError(f"Edge endpoints must differ, got {a!r} twice")
        return cls(a, b) if a < b else cls(b, a)


@dataclass(frozen=True)
class Graph:
    """
    Immutable simple graph on at most MAXN vertices.

    adj[i] is the neighbor bitset of vertex i.
    """
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAXN:
            raise ValueError(f"Vertex count {self.n} outside 0..{MAXN}")
        if len(self.adj) != self.n:
            raise ValueError(f"Expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"Row {i} references a vertex >= {self.n}")
            if row >> i & 1:
                raise ValueError(f"Vertex {i} is adjacent to itself")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"Edge {i}-{j} is not symmetric")

    # -------------------------
    # constructors
    # -------------------------
    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"Loop on vertex {a} is not allowed in a simple graph")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"Edge {a}-{b} outside 0..{n - 1}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows))

    # -------------------------
    # basic queries
    # -------------------------
    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, a: int, b: int) -> bool:
        return 0 <= a < self.n and 0 <= b < self.n and bool(self.adj[a] >> b & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted(self.degrees(), reverse=True))

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[Edge]:
        return [Edge(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    def isolated_vertices(self) -> VertexSet:
        return to_bits(i for i, row in enumerate(self.adj) if not row)

    def is_independent(self, s: VertexSet) -> bool:
        return all(not self.adj[v] & s for v in iter_bits(s))

    def __str__(self) -> str:
        return write_graph6(self)


@dataclass(frozen=True)
class ContractionResult:
    """
    Outcome of contracting one edge.

    merged: index of the new vertex in graph
    relabel: old index -> new index, for every vertex except the two endpoints
    """
    graph: Graph
    merged: int
    relabel: dict[int, int]
    edge: Edge


# -------------------------
# neighborhoods
# -------------------------
def neighborhood(g: Graph, v: int, closed: bool = False) -> VertexSet:
    """N(v), or N[v] when closed."""
    return g.adj[v] | (1 << v) if closed else g.adj[v]


def neighborhood_of_set(g: Graph, s: VertexSet) -> VertexSet:
    """N(S): union of the neighborhoods minus S itself."""
    out = 0
    for v in iter_bits(s):
        out |= g.adj[v]
    return out & ~s


def closed_neighborhood_of_set(g: Graph, s: VertexSet) -> VertexSet:
    return neighborhood_of_set(g, s) | s


def corner_dominated(g: Graph, u: int, v: int) -> bool:
    """True iff N[u] is a subset of N[v]."""
    if u == v:
        raise ValueError(f"Corner domination needs two distinct vertices, got {u!r} twice")
    return not neighborhood(g, u, closed=True) & ~neighborhood(g, v, closed=True)


# -------------------------
# derived graphs
# -------------------------
def _drop_bit(mask: int, v: int) -> int:
    """Remove position v from a bitset, shifting higher bits down."""
    low = mask & ((1 << v) - 1)
    return low | (mask >> (v + 1) << v)


def contract(g: Graph, e: tuple[int, int]) -> ContractionResult:
    """
    Contract edge e = uv into one vertex adjacent to (N(u) | N(v)) - {u, v}.

    The merged vertex keeps index min(u, v); every vertex above max(u, v)
    shifts down by one.
    """
    edge = Edge.of(*e)
    u, v = edge
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge of the graph")

    pair = (1 << u) | (1 << v)
    rows = []
    relabel = {}
    for x in range(g.n):
        if x == v:
            continue
        if x == u:
            row = (g.adj[u] | g.adj[v]) & ~pair
        else:
            row = g.adj[x] & ~pair
            if g.adj[x] & pair:
                row |= 1 << u
            relabel[x] = x if x < v else x - 1
        rows.append(_drop_bit(row, v))

    return ContractionResult(Graph(g.n - 1, tuple(rows)), u, relabel, edge)


def contractions(g: Graph) -> Iterator[ContractionResult]:
    """Every single-edge contraction of g, in edge order."""
    for edge in g.edges():
        yield contract(g, edge)


def induced(g: Graph, s: VertexSet) -> Graph:
    """G[S], vertices renumbered in ascending original order."""
    verts = list(iter_bits(s & g.vertices))
    position = {x: i for i, x in enumerate(verts)}
    rows = []
    for x in verts:
        row = 0
        for y in iter_bits(g.adj[x] & s):
            row |= 1 << position[y]
        rows.append(row)
    return Graph(len(verts), tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def permute(g: Graph, perm: Iterable[int]) -> Graph:
    """Relabel vertex i as perm[i]."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{g.n - 1}")
    rows = [0] * g.n
    for i, row in enumerate(g.adj):
        rows[perm[i]] = to_bits(perm[j] for j in iter_bits(row))
    return Graph(g.n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


# -------------------------
# graph6
# -------------------------
def write_graph6(g: Graph) -> str:
    """Encode g in graph6 (upper triangle, column by column, 6 bits per character)."""
    if g.n > _G6_SMALL:
        raise GraphTooLargeError(f"graph6 writer supports at most {_G6_SMALL} vertices, got {g.n}")

    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)

    out = [chr(g.n + _G6_BIAS)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + _G6_BIAS))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 line."""
    line = text.strip()
    if not line:
        raise MalformedHeaderError("Empty graph6 input")
    if line.startswith(">>graph6<<"):
        raise MalformedHeaderError("graph6 header prefix is not accepted")

    for pos, ch in enumerate(line):
        if not _G6_BIAS <= ord(ch) <= 126:
            raise CharacterRangeError(f"Character {ch!r} at position {pos} outside graph6 range")

    if line[0] == "~":
        # 18-bit size form, only valid for n >= 63
        if len(line) < 4 or line[1] == "~":
            raise MalformedHeaderError(f"Unsupported graph6 size header in {line[:8]!r}")
        n = 0
        for ch in line[1:4]:
            n = n << 6 | (ord(ch) - _G6_BIAS)
        if n < 63:
            raise MalformedHeaderError(f"graph6 long size header encodes {n} vertices, needs at least 63")
        raise GraphTooLargeError(f"graph6 encodes {n} vertices, maximum is {MAXN}")

    n = ord(line[0]) - _G6_BIAS
    if n > MAXN:
        raise GraphTooLargeError(f"graph6 encodes {n} vertices, maximum is {MAXN}")

    nbits = n * (n - 1) // 2
    body = line[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedBodyError(
            f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6} for n={n}"
            )

    bits = []
    for ch in body:
        value = ord(ch) - _G6_BIAS
        bits.extend(value >> (5 - k) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise MalformedBodyError("graph6 padding bits must be zero")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)
