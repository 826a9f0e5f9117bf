"""families.py"""
from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from graph import MAXN, Graph, disjoint_union
from hfree import Family, elm, is_h_free
from utils import UnknownNameError, iter_bits

log = logging.getLogger(__name__)


# -------------------------
# named graphs
# -------------------------
def path(n: int) -> Graph:
    """P_n on n vertices, 0-1-...-(n-1)."""
    if not 1 <= n <= MAXN:
        raise ValueError(f"P_n needs 1 <= n <= {MAXN}, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if not 3 <= n <= MAXN:
        raise ValueError(f"C_n needs 3 <= n <= {MAXN}, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if not 1 <= n <= MAXN:
        raise ValueError(f"K_n needs 1 <= n <= {MAXN}, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """Parts 0..m-1 and m..m+n-1."""
    if m < 1 or n < 1 or m + n > MAXN:
        raise ValueError(f"K_m,n needs m, n >= 1 and m + n <= {MAXN}, got {m},{n}")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def claw() -> Graph:
    """K1,3 centred at 0."""
    return complete_bipartite(1, 3)


def bull() -> Graph:
    """Triangle 0-1-2 with horns 3 on 0 and 4 on 1."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])


def two_k2() -> Graph:
    return Graph.from_edges(4, [(0, 1), (2, 3)])


def paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def diamond() -> Graph:
    """K4 minus the edge 2-3."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def house() -> Graph:
    """C5 with the chord 1-4."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])


def gem() -> Graph:
    """P4 0-1-2-3 plus vertex 4 adjacent to all of it."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])


def butterfly() -> Graph:
    """Triangles 0-1-2 and 0-3-4 sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def wheel4() -> Graph:
    """C4 0-1-2-3 with hub 4."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])


def octahedron() -> Graph:
    """K2,2,2: every pair adjacent except 0-1, 2-3 and 4-5."""
    return Graph.from_edges(6, [(a, b) for a, b in itertools.combinations(range(6), 2) if b != a + 1 or a % 2])


_FIXED: dict[str, tuple[Callable[[], Graph], tuple[int, ...]]] = {
    "claw": (claw, (3, 1, 1, 1)),
    "bull": (bull, (3, 3, 2, 1, 1)),
    "2k2": (two_k2, (1, 1, 1, 1)),
    "paw": (paw, (3, 2, 2, 1)),
    "diamond": (diamond, (3, 3, 2, 2)),
    "house": (house, (3, 3, 2, 2, 2)),
    "gem": (gem, (4, 3, 3, 2, 2)),
    "butterfly": (butterfly, (4, 2, 2, 2, 2)),
    "w4": (wheel4, (4, 3, 3, 3, 3)),
    "octahedron": (octahedron, (4, 4, 4, 4, 4, 4)),
    "p2+c3": (lambda: disjoint_union(path(2), cycle(3)), (2, 2, 2, 1, 1)),
    "p2+p3": (lambda: disjoint_union(path(2), path(3)), (2, 1, 1, 1, 1)),
}

_PARAMETRIC = {
    re.compile(r"p(\d+)"): lambda n: (path(n), (2,) * (n - 2) + (1, 1) if n > 1 else (0,)),
    re.compile(r"c(\d+)"): lambda n: (cycle(n), (2,) * n),
    re.compile(r"k(\d+)"): lambda n: (complete(n), (n - 1,) * n),
    re.compile(r"k(\d+),(\d+)"): lambda m, n: (
        complete_bipartite(m, n), tuple(sorted((n,) * m + (m,) * n, reverse=True))
        ),
}


@dataclass(frozen=True)
class NamedGraph:
    """A standard graph with the degree sequence its definition implies."""
    name: str
    graph: Graph
    degrees: tuple[int, ...]

    def __post_init__(self):
        if self.graph.degree_sequence() != self.degrees or self.graph.edge_count() != sum(self.degrees) // 2:
            raise ValueError(
                f"{self.name} built with degrees {self.graph.degree_sequence()}, expected {self.degrees}"
                )


def named_graph(name: str) -> NamedGraph:
    key = name.strip().lower()
    if key in _FIXED:
        build, degrees = _FIXED[key]
        return NamedGraph(key, build(), degrees)
    for pattern, build in _PARAMETRIC.items():
        match = pattern.fullmatch(key)
        if match:
            graph, degrees = build(*(int(x) for x in match.groups()))
            return NamedGraph(key, graph, degrees)
    raise UnknownNameError("graph name", name, list(_FIXED) + ["p<n>", "c<n>", "k<n>", "k<m>,<n>"])


def named(name: str) -> Graph:
    """Graph for a name such as claw, bull, 2k2, p5, c6, k4 or k2,3."""
    return named_graph(name).graph


# -------------------------
# forbidden families
# -------------------------
_FAMILY_MEMBERS = {
    "claw": ("claw",),
    "c3": ("c3",),
    "2k2": ("2k2",),
    "p4": ("p4",),
    "c4": ("c4",),
    "c5": ("c5",),
    "split": ("2k2", "c4", "c5"),
    "pseudo_split": ("2k2", "c4"),
    "threshold": ("2k2", "p4", "c4"),
}


@lru_cache(maxsize=None)
def _token_family(token: str) -> Family:
    names = _FAMILY_MEMBERS[token]
    return elm(Family.from_graphs((named(x) for x in names), names))


FAMILIES: dict[str, Family] = {token: _token_family(token) for token in _FAMILY_MEMBERS}


def family(spec: str) -> Family:
    """Union of comma-separated family tokens, reduced by elm."""
    tokens = [t.strip().lower() for t in spec.split(",") if t.strip()]
    if not tokens:
        raise ValueError("Empty family specification")
    graphs, names = [], []
    for token in tokens:
        if token not in FAMILIES:
            raise UnknownNameError("family", token, FAMILIES)
        graphs.extend(FAMILIES[token].members)
        names.extend(FAMILIES[token].names)
    return elm(Family.from_graphs(graphs, names))


# -------------------------
# split-type recognition
# -------------------------
def is_split(g: Graph) -> bool:
    return is_h_free(g, FAMILIES["split"])


def is_pseudo_split(g: Graph) -> bool:
    return is_h_free(g, FAMILIES["pseudo_split"])


def is_threshold(g: Graph) -> bool:
    return is_h_free(g, FAMILIES["threshold"])


def splittance(g: Graph) -> int:
    """
    Number of edges to add or remove to make g split, from the degree sequence.

    With d1 >= ... >= dn and m = max{i : d_i >= i - 1}:
    (m(m - 1) - sum(d_1..d_m) + sum(d_{m+1}..d_n)) / 2.
    """
    degrees = g.degree_sequence()
    if not degrees:
        return 0
    m = max(i for i, d in enumerate(degrees, start=1) if d >= i - 1)
    return (m * (m - 1) - sum(degrees[:m]) + sum(degrees[m:])) // 2


def is_split_by_degrees(g: Graph) -> bool:
    return splittance(g) == 0


def threshold_creation_sequence(g: Graph) -> str | None:
    """
    Creation sequence of g ('i' isolated, 'd' dominating, in order of addition),
    or None when stripping such vertices gets stuck.
    """
    remaining = g.vertices
    removed = []
    while remaining:
        for v in iter_bits(remaining):
            others = remaining & ~(1 << v)
            seen = g.adj[v] & remaining
            if seen == 0:
                removed.append("i")
                break
            if seen == others:
                removed.append("d")
                break
        else:
            return None
        remaining &= ~(1 << v)
    return "".join(reversed(removed))


def is_threshold_by_creation(g: Graph) -> bool:
    return threshold_creation_sequence(g) is not None


# -------------------------
# figures
# -------------------------
@dataclass(frozen=True)
class BlowUp:
    """Independent class of vertices sharing one neighborhood in the base graph."""
    name: str
    neighborhood: tuple[int, ...]
    minimum: int = 0


@dataclass(frozen=True)
class FigureMember:
    label: str
    base: Graph
    blowups: tuple[BlowUp, ...] = ()

    def build(self, sizes: tuple[int, ...]) -> Graph:
        edges = [tuple(e) for e in self.base.edges()]
        n = self.base.n
        for blowup, size in zip(self.blowups, sizes):
            for _ in range(size):
                edges.extend((x, n) for x in blowup.neighborhood)
                n += 1
        return Graph.from_edges(n, edges)

    def size_vectors(self, vertex_bound: int):
        """Every blow-up size vector with at most vertex_bound vertices in total."""
        spare = vertex_bound - self.base.n - sum(b.minimum for b in self.blowups)
        if spare < 0:
            return
        ranges = [range(b.minimum, b.minimum + spare + 1) for b in self.blowups]
        for sizes in itertools.product(*ranges):
            if self.base.n + sum(sizes) <= vertex_bound:
                yield sizes


@dataclass(frozen=True)
class FigureFamilySpec:
    """One instance of a figure member: its blow-up sizes."""
    figure: str
    member: str
    params: tuple[tuple[str, int], ...] = ()

    def label(self) -> str:
        sizes = " ".join(f"{name}={size}" for name, size in self.params)
        return f"{self.member} {sizes}".strip()


@dataclass(frozen=True)
class Figure:
    """
    A drawn family of graphs.

    kind 'splitting': the splittings of host. kind 'critical': the critically
    exist graphs of the family token, with also_free naming the extra
    forbidden graphs of the matching characterization theorem.
    """
    id: str
    title: str
    kind: str
    subject: str
    members: tuple[FigureMember, ...]
    also_free: tuple[str, ...] = ()


def _fixed(label: str, g: Graph) -> FigureMember:
    return FigureMember(label, g)


def _cycle_plus(n: int, label: str, chords: list[tuple[int, int]]) -> FigureMember:
    c = cycle(n)
    return FigureMember(label, Graph.from_edges(n, [tuple(e) for e in c.edges()] + chords))


def _on(base: Graph, extra: dict[int, tuple[int, ...]]) -> Graph:
    """Append vertices with the given neighborhoods, in key order."""
    edges = [tuple(e) for e in base.edges()]
    for v, nbrs in sorted(extra.items()):
        edges.extend((x, v) for x in nbrs)
    return Graph.from_edges(base.n + len(extra), edges)


# base labels: r=0 s=1 t=2 u=3 v=4
_R, _S, _T, _U, _V = range(5)


def _k2m(label: str) -> FigureMember:
    # C4 r-s-t-u plus any number of vertices adjacent to r and t
    return FigureMember(label, cycle(4), (BlowUp("X", (_R, _T), 0),))


def _build_figures() -> dict[str, Figure]:
    two = two_k2()
    p4 = path(4)
    c5 = cycle(5)

    figures = [
        Figure("fig1", "Claw-split graphs", "splitting", "claw", (
            _fixed("H1", Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)])),
            _fixed("H2", Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)])),
            _fixed("H3", complete_bipartite(1, 4)),
            _fixed("H4", Graph.from_edges(5, [(0, 1), (0, 3), (0, 4), (1, 2)])),
            _fixed("H5", bull()),
            _fixed("H6", Graph.from_edges(5, [(0, 1)] + [(a, b) for a in (0, 1) for b in (2, 3, 4)])),
            )),
        Figure("fig2", "Critically claw-exist graphs", "critical", "claw", (
            _fixed("H1", claw()),
            _fixed("H2", complete_bipartite(2, 3)),
            _fixed("H3", complete_bipartite(3, 3)),
            _fixed("H4", _on(claw(), {4: (2, 3)})),
            _fixed("H5", _on(claw(), {4: (2, 3), 5: (1, 2)})),
            _fixed("H6", _on(complete_bipartite(2, 3), {5: (2, 3)})),
            ), also_free=("bull",)),
        Figure("fig4", "Critically 2K2-exist graphs", "critical", "2k2", (
            _cycle_plus(6, "H1", []),
            _cycle_plus(6, "H2", [(0, 2)]),
            _cycle_plus(6, "H3", [(0, 2), (3, 5)]),
            _fixed("H4", _on(two, {4: (_R, _U), 5: (_R, _T), 6: (_S, _T, _U)})),
            FigureMember("H5", two, (
                BlowUp("W", (_R, _S, _T)),
                BlowUp("X", (_R, _S, _U)),
                BlowUp("Y", (_R, _S, _T, _U)),
                )),
            FigureMember("H6", two, (
                BlowUp("W", (_S, _T)),
                BlowUp("X", (_S, _U)),
                BlowUp("Y", (_S, _T, _U)),
                BlowUp("Z", (_R, _S, _T, _U)),
                )),
            )),
        Figure("fig5", "C4-split graphs", "splitting", "c4", (
            _cycle_plus(5, "H1", []),
            _cycle_plus(5, "H2", [(0, 2), (1, 3)]),
            _cycle_plus(5, "H3", [(0, 2)]),
            _fixed("H4", _on(cycle(4), {4: (0,)})),
            )),
        Figure("fig6", "Critically P4-exist graphs", "critical", "p4", (
            _fixed("H1", c5),
            _fixed("H2", house()),
            _fixed("H3", _on(house(), {5: (_R, _T, _U)})),
            FigureMember("H4", p4, (BlowUp("W", (_R, _T)),)),
            FigureMember("H5", p4, (BlowUp("W", (_R, _S, _T, _U)),)),
            )),
        Figure("fig7", "Critically C4-exist graphs", "critical", "c4", (
            _k2m("H1"),
            _fixed("H2", wheel4()),
            _fixed("H3", octahedron()),
            ), also_free=("c5",)),
        Figure("fig8", "C5-split graphs", "splitting", "c5", (
            _cycle_plus(6, "H1", []),
            _cycle_plus(6, "H2", [(0, 2), (1, 3)]),
            _cycle_plus(6, "H3", [(0, 2)]),
            _fixed("H4", _on(c5, {5: (0,)})),
            )),
        Figure("fig9", "Critically C5-exist graphs", "critical", "c5", (
            _fixed("H1", _on(c5, {5: (_R, _T, _U), 6: (_S, _T, _U, _V)})),
            FigureMember("H2", _on(c5, {5: (_R, _T, _U), 6: (_S, _U, _V)}), (BlowUp("Y", (_R, _S, _U)),)),
            FigureMember("H3", _on(c5, {5: (_R, _S, _T, _U), 6: (_S, _T, _U, _V)}), (BlowUp("Y", (_R, _T, _V)),)),
            FigureMember("H4", c5, (
                BlowUp("W", (_R, _T)),
                BlowUp("X", (_R, _U)),
                BlowUp("Y", (_R, _T, _U)),
                )),
            FigureMember("H5", c5, (
                BlowUp("W", (_R, _T)),
                BlowUp("X", (_R, _T, _U)),
                BlowUp("Y", (_R, _T, _V)),
                BlowUp("Z", (_R, _T, _U, _V)),
                )),
            FigureMember("H6", c5, (
                BlowUp("W", (_R, _T, _U)),
                BlowUp("X", (_R, _T, _V)),
                BlowUp("Y", (_R, _S, _T, _U)),
                BlowUp("Z", (_R, _T, _U, _V)),
                BlowUp("A", (_R, _S, _T, _U, _V)),
                )),
            ), also_free=("c6",)),
    ]

    split_common = (
        _k2m("H1"),
        _fixed("H2", wheel4()),
        _fixed("H3", octahedron()),
        _fixed("H4", two),
        )
    # triangle c-d-e with the path e-b-a hanging off e
    pendant_path = Graph.from_edges(5, [(0, 1), (1, 4), (4, 2), (2, 3), (3, 4)])
    figures.append(Figure("fig10", "Critically non-split graphs", "critical", "split", split_common + (
        _fixed("H5", path(5)),
        _fixed("H6", pendant_path),
        _fixed("H7", butterfly()),
        )))
    figures.append(Figure("fig11", "Critically non-pseudo-split graphs", "critical", "pseudo_split", split_common + (
        _fixed("H5", path(5)),
        _fixed("H6", pendant_path),
        _fixed("H7", butterfly()),
        _fixed("H8", cycle(6)),
        ), also_free=("c5",)))
    # drawn caption spells it "non-thershold"
    figures.append(Figure("fig12", "Critically non-threshold graphs", "critical", "threshold", split_common + (
        _fixed("H5", p4),
        _fixed("H6", gem()),
        _fixed("H7", butterfly()),
        ), also_free=("c5",)))
    return {f.id: f for f in figures}


FIGURES: dict[str, Figure] = _build_figures()


def get_figure(figure_id: str) -> Figure:
    try:
        return FIGURES[figure_id.lower()]
    except KeyError as e:
        raise UnknownNameError("figure", figure_id, FIGURES) from e


def figure_instances(figure_id: str, vertex_bound: int = 9) -> list[tuple[FigureFamilySpec, Graph]]:
    """Every instance of every member of a figure with at most vertex_bound vertices."""
    if vertex_bound > MAXN:
        raise ValueError(f"Figure vertex bound {vertex_bound} exceeds MAXN={MAXN}")
    figure = get_figure(figure_id)
    if figure.id == "fig12":
        log.debug("fig12 characterization is checked against its own figure, not the split figure its hypothesis cites")

    instances = []
    for member in figure.members:
        for sizes in member.size_vectors(vertex_bound):
            params = tuple((b.name, size) for b, size in zip(member.blowups, sizes))
            instances.append((FigureFamilySpec(figure.id, member.label, params), member.build(sizes)))
    log.debug("%s: %d instances within %d vertices", figure.id, len(instances), vertex_bound)
    return instances


@lru_cache(maxsize=None)
def figure_graphs(figure_id: str, vertex_bound: int = 9) -> Family:
    """Instances of a figure deduplicated up to isomorphism; names carry the parameters."""
    instances = figure_instances(figure_id, vertex_bound)
    return Family.from_graphs((g for _, g in instances), (spec.label() for spec, _ in instances))


def figure_free_family(figure_id: str) -> Family:
    """Extra forbidden graphs of the characterization matching a critical figure."""
    figure = get_figure(figure_id)
    return Family.from_graphs(named(x) for x in figure.also_free)
