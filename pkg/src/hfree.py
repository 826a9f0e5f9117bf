"""hfree.py"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from canon import CanonicalForm, canonical_form, is_isomorphic, orbit_representatives
from graph import (
    Edge,
    Graph,
    VertexSet,
    closed_neighborhood_of_set,
    contract,
    contractions,
    corner_dominated,
    induced,
    neighborhood,
)
from utils import iter_bits

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Family:
    """
    Ordered collection of pairwise non-isomorphic graphs.

    Equality compares the multiset of canonical forms, so two families built
    in different orders are equal.
    """
    members: tuple[Graph, ...] = ()
    names: tuple[str, ...] = ()
    forms: tuple[CanonicalForm, ...] = field(default=(), repr=False)

    @classmethod
    def from_graphs(cls, graphs: Iterable[Graph], names: Iterable[str] | None = None,
           allow_isolated: bool = False) -> Family:
        """Build a family, dropping later duplicates up to isomorphism."""
        graphs = list(graphs)
        labels = list(names) if names is not None else [""] * len(graphs)
        if len(labels) != len(graphs):
            raise ValueError(f"Got {len(labels)} names for {len(graphs)} graphs")

        members, kept_names, forms, seen = [], [], [], set()
        for g, label in zip(graphs, labels):
            if not allow_isolated and g.isolated_vertices():
                raise ValueError(f"Family member {g} has isolated vertices")
            form = canonical_form(g)
            if form in seen:
                continue
            seen.add(form)
            members.append(g)
            kept_names.append(label)
            forms.append(form)
        return cls(tuple(members), tuple(kept_names), tuple(forms))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.members)

    def __contains__(self, g: Graph) -> bool:
        return canonical_form(g) in self.forms

    def canonical_multiset(self) -> tuple[CanonicalForm, ...]:
        return tuple(sorted(self.forms))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.canonical_multiset() == other.canonical_multiset()

    def __hash__(self) -> int:
        return hash(self.canonical_multiset())

    def label(self, index: int) -> str:
        return self.names[index] or str(self.members[index])


@dataclass(frozen=True)
class SplitSpec:
    """(H, v, U, W) with U | W = N_H(v)."""
    host: Graph
    v: int
    U: VertexSet
    W: VertexSet

    def __post_init__(self):
        nv = neighborhood(self.host, self.v)
        if (self.U | self.W) != nv:
            raise ValueError(
                f"U | W must equal N({self.v}) = {sorted(iter_bits(nv))}, "
                f"got U={sorted(iter_bits(self.U))} W={sorted(iter_bits(self.W))}"
                )


@dataclass(frozen=True)
class CriticalEdgeQuery:
    """
    Is edge e critical for the vertex set s?

    h is the reference graph; when omitted it is the graph s induces.
    """
    g: Graph
    s: VertexSet
    e: Edge
    h: Graph | None = None

    def __post_init__(self):
        if not self.g.has_edge(*self.e):
            raise ValueError(f"{self.e[0]}-{self.e[1]} is not an edge of the graph")
        if self.h is not None and not is_isomorphic(induced(self.g, self.s), self.h):
            raise ValueError(f"Vertex set {sorted(iter_bits(self.s))} does not induce the reference graph")

    @property
    def reference(self) -> Graph:
        return self.h if self.h is not None else induced(self.g, self.s)


class CheckOutcome(NamedTuple):
    """applies: the hypothesis holds for g. holds: the conclusion (vacuously True otherwise)."""
    applies: bool
    holds: bool


# -------------------------
# induced subgraph search
# -------------------------
def induced_copies(g: Graph, h: Graph) -> Iterator[VertexSet]:
    """
    Every vertex set of g inducing a copy of h, in lexicographic order.

    Backtracks over vertices in ascending order; vertices whose degree is
    below the minimum degree of h never enter, and a branch stops as soon
    as it holds more edges than h.
    """
    k = h.n
    if k > g.n:
        return
    if k == 0:
        yield 0
        return

    target = canonical_form(h)
    target_edges = h.edge_count()
    target_degrees = h.degree_sequence()
    min_degree = min(h.degrees())
    candidates = [v for v in range(g.n) if g.degree(v) >= min_degree]

    def extend(start: int, chosen: VertexSet, size: int, edges: int) -> Iterator[VertexSet]:
        if size == k:
            if edges != target_edges:
                return
            degrees = tuple(sorted(((g.adj[v] & chosen).bit_count() for v in iter_bits(chosen)), reverse=True))
            if degrees == target_degrees and canonical_form(induced(g, chosen)) == target:
                yield chosen
            return
        for idx in range(start, len(candidates) - (k - size) + 1):
            v = candidates[idx]
            added = (g.adj[v] & chosen).bit_count()
            if edges + added > target_edges:
                continue
            yield from extend(idx + 1, chosen | (1 << v), size + 1, edges + added)

    yield from extend(0, 0, 0, 0)


def find_induced(g: Graph, h: Graph) -> VertexSet | None:
    """Lexicographically least vertex set inducing h, or None."""
    return next(induced_copies(g, h), None)


def find_family_member(g: Graph, fam: Family) -> tuple[int, VertexSet] | None:
    """First member (in family order) induced in g, with its least witness."""
    for index, h in enumerate(fam.members):
        witness = find_induced(g, h)
        if witness is not None:
            return index, witness
    return None


def is_h_free(g: Graph, fam: Family) -> bool:
    return find_family_member(g, fam) is None


def elm(fam: Family) -> Family:
    """Members containing no other member as an induced subgraph."""
    kept = [
        (h, fam.names[i]) for i, h in enumerate(fam.members)
        if all(j == i or find_induced(h, other) is None for j, other in enumerate(fam.members))
    ]
    return Family.from_graphs((h for h, _ in kept), (name for _, name in kept), allow_isolated=True)


# -------------------------
# splitting
# -------------------------
def splitting_one(spec: SplitSpec) -> Graph:
    """
    Replace v by adjacent vertices u, w with N(u) = U + w and N(w) = W + u.

    u takes the index of v and w is appended as the last vertex.
    """
    h, v = spec.host, spec.v
    w = h.n
    rows = []
    for x in range(h.n):
        if x == v:
            rows.append(spec.U | (1 << w))
            continue
        row = h.adj[x] & ~(1 << v)
        if spec.U >> x & 1:
            row |= 1 << v
        if spec.W >> x & 1:
            row |= 1 << w
        rows.append(row)
    rows.append(spec.W | (1 << v))
    return Graph(h.n + 1, tuple(rows))


def _split_pairs(nv: VertexSet) -> Iterator[tuple[VertexSet, VertexSet]]:
    """Ordered (U, W) with U | W = nv: each neighbor goes to U, W, or both."""
    neighbors = list(iter_bits(nv))
    for choice in itertools.product((0, 1, 2), repeat=len(neighbors)):
        U = W = 0
        for x, c in zip(neighbors, choice):
            if c != 1:
                U |= 1 << x
            if c != 0:
                W |= 1 << x
        yield U, W


def _splitting_raw(h: Graph, v: int) -> list[Graph]:
    nv = neighborhood(h, v)
    if not nv:
        log.warning("Skipping splitting at isolated vertex %d of %s", v, h)
        return []
    return [splitting_one(SplitSpec(h, v, U, W)) for U, W in _split_pairs(nv)]


def splitting_vertex(h: Graph, v: int) -> Family:
    return Family.from_graphs(_splitting_raw(h, v), allow_isolated=True)


def splitting_graph(h: Graph) -> Family:
    """Similar vertices have the same splittings, so one per orbit suffices."""
    raw = [g for v in orbit_representatives(h) for g in _splitting_raw(h, v)]
    return Family.from_graphs(raw, allow_isolated=True)


def splitting_family(fam: Family) -> Family:
    raw = [g for h in fam.members for v in orbit_representatives(h) for g in _splitting_raw(h, v)]
    return Family.from_graphs(raw, allow_isolated=True)


def is_h_split(g: Graph, fam: Family) -> bool:
    """Some single-edge contraction of g is isomorphic to a member."""
    return any(c.graph in fam for c in contractions(g))


def fs(fam: Family) -> Family:
    """The fam-free members of splitting(fam)."""
    split = splitting_family(fam)
    return Family.from_graphs((g for g in split.members if is_h_free(g, fam)), allow_isolated=True)


# -------------------------
# contraction predicates
# -------------------------
def all_contractions_free(g: Graph, fam: Family) -> bool:
    return all(is_h_free(c.graph, fam) for c in contractions(g))


def is_strongly_h_free(g: Graph, fam: Family) -> bool:
    """Every single-edge contraction of the fam-free graph g is fam-free."""
    if not is_h_free(g, fam):
        raise ValueError(f"{g} is not free of the given family")
    return all_contractions_free(g, fam)


def is_strongly_h_free_by_fs(g: Graph, fam: Family, free_split: Family | None = None) -> bool:
    """Same predicate, decided as fs(fam)-freeness."""
    if not is_h_free(g, fam):
        raise ValueError(f"{g} is not free of the given family")
    return is_h_free(g, free_split if free_split is not None else fs(fam))


def critically_exist(g: Graph, fam: Family) -> bool:
    """fam-exist while every contraction is fam-free; no isolated-vertex check."""
    return not is_h_free(g, fam) and all_contractions_free(g, fam)


def is_critically_h_exist(g: Graph, fam: Family) -> bool:
    if g.isolated_vertices():
        raise ValueError(f"{g} has isolated vertices {sorted(iter_bits(g.isolated_vertices()))}")
    return critically_exist(g, fam)


# -------------------------
# critical edges
# -------------------------
def f_map(g: Graph, e: tuple[int, int], s: VertexSet) -> VertexSet:
    """Image of s in G/e: the endpoints, if present, collapse onto the merged vertex."""
    result = contract(g, e)
    u, v = result.edge
    image = 0
    for x in iter_bits(s & ~((1 << u) | (1 << v))):
        image |= 1 << result.relabel[x]
    if s >> u & 1 or s >> v & 1:
        image |= 1 << result.merged
    return image


def is_h_critical_for(q: CriticalEdgeQuery) -> bool:
    """G/e restricted to f(S) is no longer isomorphic to H."""
    contracted = contract(q.g, q.e).graph
    return not is_isomorphic(induced(contracted, f_map(q.g, q.e, q.s)), q.reference)


def is_h_critical_by_corners(q: CriticalEdgeQuery) -> bool:
    """
    Syntactic form: both endpoints lie in S, or exactly one does and the
    outside endpoint is not corner-dominated by the inside one in G[S + outside].
    """
    u, v = Edge.of(*q.e)
    in_u, in_v = bool(q.s >> u & 1), bool(q.s >> v & 1)
    if in_u and in_v:
        return True
    if not in_u and not in_v:
        return False
    outside, inside = (u, v) if in_v else (v, u)
    t = q.s | (1 << outside)

    def position(x: int) -> int:
        return (t & ((1 << x) - 1)).bit_count()

    return not corner_dominated(induced(q.g, t), position(outside), position(inside))


def is_h_critical_in(g: Graph, h: Graph, e: tuple[int, int]) -> bool:
    """e is critical for every vertex set inducing h; vacuously true when there is none."""
    edge = Edge.of(*e)
    return all(is_h_critical_for(CriticalEdgeQuery(g, s, edge, h)) for s in induced_copies(g, h))


def is_almost_dominating(g: Graph, e: tuple[int, int]) -> bool:
    """V - N[{u, v}] is independent."""
    u, v = Edge.of(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge of the graph")
    rest = g.vertices & ~closed_neighborhood_of_set(g, (1 << u) | (1 << v))
    return g.is_independent(rest)


def critical_structure_violations(g: Graph, fam: Family) -> list[str]:
    """
    Structural facts every critically fam-exist graph satisfies, for every S
    inducing a member: V - S is independent, no outside vertex is a corner
    dominated by a vertex of S, and no outside vertex sees exactly one
    vertex, two adjacent vertices, a P3 or C3, or a vertex of degree n - 1.
    """
    problems = []
    full_degree = g.n - 1
    for h in fam.members:
        for s in induced_copies(g, h):
            outside = g.vertices & ~s
            where = f"S={sorted(iter_bits(s))}"
            if not g.is_independent(outside):
                problems.append(f"{where}: V-S is not independent")
                continue
            for x in iter_bits(outside):
                nx = g.adj[x]
                for y in iter_bits(s):
                    if corner_dominated(g, x, y):
                        problems.append(f"{where}: {x} is a corner dominated by {y}")
                size = nx.bit_count()
                inner_edges = induced(g, nx).edge_count()
                if size == 1 or (size == 2 and inner_edges == 1) or (size == 3 and inner_edges >= 2):
                    problems.append(f"{where}: {x} sees a forbidden neighborhood {sorted(iter_bits(nx))}")
                if any(g.degree(y) == full_degree for y in iter_bits(nx)):
                    problems.append(f"{where}: {x} is adjacent to a vertex of degree {full_degree}")
    return problems


# -------------------------
# characterization checks
# -------------------------
def characterization_check(g: Graph, fam: Family, free_split: Family | None = None) -> CheckOutcome:
    """
    Hypothesis: g is fs(fam)-free and not critically fam-exist.
    Conclusion: g is fam-free iff every contraction is fam-free.
    """
    free_split = free_split if free_split is not None else fs(fam)
    applies = is_h_free(g, free_split) and not critically_exist(g, fam)
    if not applies:
        return CheckOutcome(False, True)
    return CheckOutcome(True, is_h_free(g, fam) == all_contractions_free(g, fam))


def unique_2k2_criticality_check(g: Graph) -> CheckOutcome:
    """
    Hypothesis: exactly one vertex set induces 2K2 and every edge is critical for it.
    Conclusion: g is critically 2K2-exist.
    """
    two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    copies = list(itertools.islice(induced_copies(g, two_k2), 2))
    if len(copies) != 1:
        return CheckOutcome(False, True)
    s = copies[0]
    if not all(is_h_critical_for(CriticalEdgeQuery(g, s, e, two_k2)) for e in g.edges()):
        return CheckOutcome(False, True)
    return CheckOutcome(True, critically_exist(g, Family.from_graphs([two_k2])))
