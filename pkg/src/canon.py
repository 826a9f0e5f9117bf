"""canon.py"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from graph import Graph, permute


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    Isomorphism-class certificate.

    certificate = n as one byte, followed by the upper triangle of the
    canonically relabeled adjacency matrix, column by column, big-endian.
    """
    certificate: bytes

    @property
    def n(self) -> int:
        return self.certificate[0]

    def graph(self) -> Graph:
        """Rebuild the canonical representative."""
        n = self.n
        nbits = n * (n - 1) // 2
        value = int.from_bytes(self.certificate[1:], "big")
        edges = []
        k = nbits - 1
        for j in range(1, n):
            for i in range(j):
                if value >> k & 1:
                    edges.append((i, j))
                k -= 1
        return Graph.from_edges(n, edges)

    def hex(self) -> str:
        return self.certificate.hex()


# -------------------------
# partition refinement
# -------------------------
def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """
    Colour refinement to an ordered equitable partition.

    Cells split by neighbor counts into every current cell; the split parts
    keep the parent position and are ordered by that count vector, so the
    result depends only on the isomorphism type of (g, cells).
    """
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((g.adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            refined.extend(groups[sig] for sig in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _certificate(g: Graph, order: list[int]) -> int:
    value = 0
    for j in range(1, g.n):
        row = g.adj[order[j]]
        for i in range(j):
            value = value << 1 | (row >> order[i] & 1)
    return value


def _are_twins(g: Graph, x: int, y: int) -> bool:
    return (g.adj[x] & ~(1 << y)) == (g.adj[y] & ~(1 << x))


def _search(g: Graph, cells: list[list[int]]) -> tuple[int, list[int]]:
    """Least certificate over the individualisation-refinement leaves below cells."""
    cells = _refine(g, cells)
    target = next((k for k, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        order = [cell[0] for cell in cells]
        return _certificate(g, order), order

    best = None
    tried: list[int] = []
    for x in cells[target]:
        # swapping twins is an automorphism fixing the current partition
        if any(_are_twins(g, x, y) for y in tried):
            continue
        tried.append(x)
        rest = [y for y in cells[target] if y != x]
        branch = cells[:target] + [[x], rest] + cells[target + 1:]
        found = _search(g, branch)
        if best is None or found[0] < best[0]:
            best = found
    return best


def _pack(n: int, value: int) -> CanonicalForm:
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return CanonicalForm(bytes([n]) + value.to_bytes(nbytes, "big"))


# -------------------------
# public operations
# -------------------------
@lru_cache(maxsize=1 << 20)
def canonical_form(g: Graph) -> CanonicalForm:
    if g.n == 0:
        return _pack(0, 0)
    value, _ = _search(g, [list(range(g.n))])
    return _pack(g.n, value)


def canonical_labeling(g: Graph) -> list[int]:
    """order[i] = original vertex placed at canonical position i."""
    if g.n == 0:
        return []
    return _search(g, [list(range(g.n))])[1]


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return permute(g, perm)


def rooted_form(g: Graph, v: int) -> CanonicalForm:
    """Certificate of g with vertex v distinguished."""
    rest = [x for x in range(g.n) if x != v]
    cells = [[v], rest] if rest else [[v]]
    value, _ = _search(g, cells)
    return _pack(g.n, value)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_orbits(g: Graph) -> list[tuple[int, ...]]:
    """
    Vertex orbits under Aut(g), each sorted, ordered by smallest member.

    u and v share an orbit iff their rooted certificates agree; only
    vertices in one refinement cell need comparing.
    """
    orbits = []
    for cell in _refine(g, [list(range(g.n))]) if g.n else []:
        by_form: dict[CanonicalForm, list[int]] = {}
        for v in cell:
            by_form.setdefault(rooted_form(g, v), []).append(v)
        orbits.extend(tuple(sorted(block)) for block in by_form.values())
    return sorted(orbits)


def orbit_representatives(g: Graph) -> list[int]:
    return [orbit[0] for orbit in automorphism_orbits(g)]
