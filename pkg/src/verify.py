"""verify.py"""
from __future__ import annotations

import json
import logging
import multiprocessing
import time
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Callable, Iterable

from tqdm import tqdm

from enumeration import EXHAUSTIVE_LIMIT, KNOWN_COUNTS, GraphSpace, brute_force_classes, enumerate_graphs
from families import (
    FAMILIES,
    FIGURES,
    cycle,
    figure_free_family,
    figure_graphs,
    figure_instances,
    is_split,
    is_split_by_degrees,
    is_threshold,
    is_threshold_by_creation,
    named,
    path,
)
from graph import Graph, contractions
from hfree import (
    CriticalEdgeQuery,
    Family,
    all_contractions_free,
    characterization_check,
    critical_structure_violations,
    critically_exist,
    elm,
    find_induced,
    fs,
    induced_copies,
    is_almost_dominating,
    is_h_critical_by_corners,
    is_h_critical_for,
    is_h_free,
    is_h_split,
    splitting_family,
    splitting_graph,
    unique_2k2_criticality_check,
)
from utils import UnknownNameError

log = logging.getLogger(__name__)

CHUNK_SIZE = 256

# single-graph families the splitting and key theorems are replayed on
_SINGLE_TOKENS = ("claw", "2k2", "p4", "c4", "c5")


@dataclass(frozen=True)
class Bounds:
    nmax: int = 8
    workers: int = 1
    counterexample_cap: int = 100
    figure_vertex_bound: int = 9
    progress: bool = False

    def __post_init__(self):
        if not 0 <= self.nmax <= EXHAUSTIVE_LIMIT:
            raise ValueError(f"nmax must be within 0..{EXHAUSTIVE_LIMIT}, got {self.nmax}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")
        if self.counterexample_cap < 1:
            raise ValueError(f"counterexample_cap must be at least 1, got {self.counterexample_cap}")


@dataclass(frozen=True)
class Claim:
    """
    One verifiable statement.

    Exactly one of the three modes is set:
      check   per graph: True verified, False counterexample, None not applicable
      select  per graph: collects the graphs it accepts, compared with expected(nmax)
      run     direct computation returning (verified, counterexamples)
    """
    id: str
    anchor: str
    check: Callable[[Graph], bool | None] | None = None
    select: Callable[[Graph], bool] | None = None
    expected: Callable[[int], Family] | None = None
    run: Callable[[Bounds], tuple[int, list[str]]] | None = None
    nmax: int | None = None
    exclude_isolated: bool = True
    subject: str = ""

    def space_for(self, bounds: Bounds) -> GraphSpace:
        nmax = bounds.nmax if self.nmax is None else min(bounds.nmax, self.nmax)
        return enumerate_graphs(nmax, self.exclude_isolated)


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    anchor: str
    space: str
    verified: int
    counterexamples: tuple[str, ...]
    found: int
    elapsed: float

    @property
    def success(self) -> bool:
        return not self.counterexamples


# -------------------------
# shared families
# -------------------------
@lru_cache(maxsize=None)
def _free_split(token: str) -> Family:
    return fs(FAMILIES[token])


@lru_cache(maxsize=None)
def _splitting(token: str) -> Family:
    return splitting_family(FAMILIES[token])


@lru_cache(maxsize=None)
def _unreduced_families() -> tuple[tuple[Family, Family], ...]:
    """(family, elm(family)) pairs whose members are not pairwise incomparable."""
    raw = [
        ("p3", "p4"),
        ("claw", "k1,4", "bull"),
        ("2k2", "c4", "c5", "c6", "p5"),
        ("c4", "k2,3", "w4"),
        ("p4", "house", "c5"),
        ]
    pairs = []
    for names in raw:
        fam = Family.from_graphs((named(x) for x in names), names)
        pairs.append((fam, elm(fam)))
    return tuple(pairs)


# -------------------------
# per-graph checks
# -------------------------
def _check_elm(g: Graph) -> bool:
    return all(is_h_free(g, fam) == is_h_free(g, reduced) for fam, reduced in _unreduced_families())


def _check_cc_splitting(g: Graph) -> bool:
    return all(is_h_split(g, FAMILIES[t]) == (g in _splitting(t)) for t in _SINGLE_TOKENS)


def _check_key(g: Graph) -> bool | None:
    applicable = [t for t in _SINGLE_TOKENS if is_h_free(g, FAMILIES[t])]
    if not applicable:
        return None
    return all(all_contractions_free(g, FAMILIES[t]) == is_h_free(g, _free_split(t)) for t in applicable)


_CRITICAL_EDGE_TARGETS = ("k2", "p3", "claw", "2k2", "p4", "c4")


def _check_constructive_edge(g: Graph) -> bool | None:
    checked = False
    for name in _CRITICAL_EDGE_TARGETS:
        for s in induced_copies(g, named(name)):
            for e in g.edges():
                query = CriticalEdgeQuery(g, s, e)
                if is_h_critical_for(query) != is_h_critical_by_corners(query):
                    return False
                checked = True
    return True if checked else None


def _check_critical_structure(g: Graph) -> bool | None:
    critical = [fam for fam in FAMILIES.values() if critically_exist(g, fam)]
    if not critical:
        return None
    return not any(critical_structure_violations(g, fam) for fam in critical)


def _check_cycle_contraction(g: Graph) -> bool | None:
    applies = None
    for k in range(5, min(7, g.n) + 1):
        if find_induced(g, cycle(k)) is None:
            continue
        smaller = cycle(k - 1)
        if not any(find_induced(c.graph, smaller) is not None for c in contractions(g)):
            return False
        applies = True
    return applies


def _check_almost_dominating(g: Graph) -> bool:
    return is_h_free(g, FAMILIES["2k2"]) == all(is_almost_dominating(g, e) for e in g.edges())


def _check_unique_2k2(g: Graph) -> bool | None:
    outcome = unique_2k2_criticality_check(g)
    return outcome.holds if outcome.applies else None


def _check_char_general(g: Graph) -> bool | None:
    applicable = []
    for token, fam in FAMILIES.items():
        outcome = characterization_check(g, fam, _free_split(token))
        if outcome.applies:
            applicable.append(outcome.holds)
    return all(applicable) if applicable else None


def _characterization(figure_id: str) -> Callable[[Graph], bool | None]:
    """G free of the extra graphs and outside the figure: fam-free iff every contraction is."""
    figure = FIGURES[figure_id]
    fam = FAMILIES[figure.subject]

    def check(g: Graph) -> bool | None:
        if not is_h_free(g, figure_free_family(figure_id)) or g in figure_graphs(figure_id, g.n):
            return None
        return is_h_free(g, fam) == all_contractions_free(g, fam)

    return check


def _check_split_oracle(g: Graph) -> bool:
    return is_split(g) == is_split_by_degrees(g)


def _check_threshold_oracle(g: Graph) -> bool:
    return is_threshold(g) == is_threshold_by_creation(g)


def _check_split_closed(g: Graph) -> bool | None:
    if not is_split(g):
        return None
    return all(is_split(c.graph) for c in contractions(g))


def _critical_for(token: str) -> Callable[[Graph], bool]:
    return lambda g: critically_exist(g, FAMILIES[token])


# -------------------------
# direct claims
# -------------------------
def _compare(found: Family, expected: Family, prefix: str = "") -> tuple[int, list[str]]:
    failures = [f"{prefix}unexpected {g}" for g in found.members if g not in expected]
    failures += [f"{prefix}missing {g}" for g in expected.members if g not in found]
    return len(found), failures


def _splitting_matches(host: str, expected: Callable[[], Family]) -> Callable[[Bounds], tuple[int, list[str]]]:
    return lambda bounds: _compare(splitting_graph(named(host)), expected())


def _fs_matches(token: str, expected: tuple[str, ...]) -> Callable[[Bounds], tuple[int, list[str]]]:
    return lambda bounds: _compare(_free_split(token), Family.from_graphs(named(x) for x in expected))


def _run_fcc_paths(bounds: Bounds) -> tuple[int, list[str]]:
    failures = []
    for n in range(2, 8):
        failures += [f"P{n}: {g}" for g in fs(Family.from_graphs([path(n)]))]
    return 6, failures


def _run_fcc_cycles(bounds: Bounds) -> tuple[int, list[str]]:
    failures = []
    for n in range(3, 8):
        _, diff = _compare(fs(Family.from_graphs([cycle(n)])), Family.from_graphs([cycle(n + 1)]), f"C{n}: ")
        failures += diff
    return 5, failures


def _run_enumeration_counts(bounds: Bounds) -> tuple[int, list[str]]:
    failures = []
    for n in range(bounds.nmax + 1):
        count = len(enumerate_graphs(n).level(n))
        if count != KNOWN_COUNTS[n]:
            failures.append(f"n={n}: {count} classes, expected {KNOWN_COUNTS[n]}")
        if n <= 5 and count != len(brute_force_classes(n)):
            failures.append(f"n={n}: {count} classes, brute force finds {len(brute_force_classes(n))}")
    return bounds.nmax + 1, failures


def _run_figure_instances(bounds: Bounds) -> tuple[int, list[str]]:
    checked = 0
    failures = []
    for figure in FIGURES.values():
        split = splitting_graph(named(figure.subject)) if figure.kind == "splitting" else None
        for spec, g in figure_instances(figure.id, bounds.figure_vertex_bound):
            checked += 1
            if split is not None:
                ok = g in split
            else:
                ok = not g.isolated_vertices() and critically_exist(g, FAMILIES[figure.subject])
            if not ok:
                failures.append(f"{figure.id} {spec.label()}: {g}")
    return checked, failures


# -------------------------
# registry
# -------------------------
def _complete(figure_id: str, anchor: str) -> Claim:
    token = FIGURES[figure_id].subject
    return Claim(
        f"ec_{token}_complete", anchor,
        select=_critical_for(token),
        expected=lambda nmax: figure_graphs(figure_id, nmax),
        subject=f"critically {token}-exist graphs vs {figure_id}",
        )


def _char(token: str, figure_id: str, anchor: str) -> Claim:
    return Claim(f"char_{token}", anchor, check=_characterization(figure_id), nmax=7)


_REGISTRY = [
    Claim("elm", r'Proposition "prop: elem": "Graph $G$ is $\mathcal{H}$-free if and only if G is '
          r'$\elm(\mathcal{H})$-free"', check=_check_elm, nmax=7),
    Claim("cc_splitting", r'Theorem "CC=H[]": "$G$ is an $\mathcal{H}$-split if and only if '
          r'$G \in splitting(\mathcal{H})$"', check=_check_cc_splitting, nmax=7),
    Claim("key", r'Proposition "Theorem: key": "Then $G$ is strongly $\mathcal{H}$-free if and only if '
          r'$G$ is $\fs(\mathcal{H})$-free"', check=_check_key),
    Claim("constructive_edge", r'Theorem "constructive edge characterization": "$uv$ is $H$-critical for $S$ '
          r'if and only if", "$u$ is not a corner dominated by $v$ in the subgraph $G[S\cup \{u\}]$"',
          check=_check_constructive_edge, nmax=7),
    Claim("critical_structure", r'Theorem "critical H-exist: not S is independent": "$V(G) - S$ is independent", '
          r'"there is no corner in $V(G) - S$ that is dominated by a vertex in $S$"', check=_check_critical_structure),
    Claim("cycle_contraction", r'Proposition "Lemma: Cycle contraction": "there is a $G$-contraction that is '
          r'$C_{n-1}$-exist"', check=_check_cycle_contraction, nmax=7),
    Claim("almost_dominating", r'Proposition "almost-dominating and 2k2-free": "A graph $G$ is $2K_{2}$-free if and '
          r'only if any edge in $E(G)$ is almost-dominating"', check=_check_almost_dominating),
    Claim("unique_2k2", r'Lemma "almost-dominating and 2k2-free": "If every edge $e$ in $E(G)$ is $e$ is '
          r'$2K_{2}$-critical for $S$, then $G$ is a critically $2K_{2}$-exist"', check=_check_unique_2k2),
    Claim("ec_c3", r'Proposition "EC(C3)": "The only critical $C_{3}$-exist graph is $C_{3}$"',
          select=_critical_for("c3"), subject="critically c3-exist graphs",
          expected=lambda nmax: Family.from_graphs([cycle(3)] if nmax >= 3 else [])),
    Claim("cc_claw", r'Proposition "CC(claw)": "are the only claw-split graphs"',
          run=_splitting_matches("claw", lambda: figure_graphs("fig1")), subject="splitting(claw) vs fig1"),
    Claim("cc_2k2", r'Proposition "CC(2K2)": "The graphs $P_{2} \cup C_{3}$ and $P_{2} \cup P_{3}$ are the only '
          r'$2K_{2}$-split graphs"',
          run=_splitting_matches("2k2", lambda: Family.from_graphs([named("p2+c3"), named("p2+p3")])),
          subject="splitting(2K2)"),
    Claim("cc_c4", r'Proposition "CC(C4)": "are the only $C_{4}$-split graphs"',
          run=_splitting_matches("c4", lambda: figure_graphs("fig5")), subject="splitting(C4) vs fig5"),
    Claim("cc_c5", r'Proposition "CC(C5)": "are the only $C_{5}$-split graphs"',
          run=_splitting_matches("c5", lambda: figure_graphs("fig8")), subject="splitting(C5) vs fig8"),
    Claim("fcc_claw", r'Corollary "FCC(claw)": "Bull is the only claw-free-split graph"',
          run=_fs_matches("claw", ("bull",)), subject="fs(claw)"),
    Claim("fcc_2k2", r'Corollary "FCC(2K2)": "There is no $2K_{2}$-free-split graph"',
          run=_fs_matches("2k2", ()), subject="fs(2K2)"),
    Claim("fcc_p4", r'Corollary "FCC(P4)": "There is no $P_{4}$-free-split graph"',
          run=_fs_matches("p4", ()), subject="fs(P4)"),
    Claim("fcc_c4", r'Corollary "FCC(C4)": "$C_{5}$ is the only $C_{4}$-free-split graph"',
          run=_fs_matches("c4", ("c5",)), subject="fs(C4)"),
    Claim("fcc_c5", r'Corollary "FCC(C5)": "$C_{6}$ is the only $C_{5}$-free-split graph"',
          run=_fs_matches("c5", ("c6",)), subject="fs(C5)"),
    Claim("fcc_paths", r'Proposition "no free-split for paths": "If $G$ is a path, then $splitting(G)$ contains '
          r'no $G$-free-split graph"', run=_run_fcc_paths, subject="fs(P_n), 2<=n<=7"),
    Claim("fcc_cycles", r'Proposition "only one free-split for cycles": "If $G$ is a $C_{n}$ for an integer '
          r'$n \geq 3$, then the $G$-free-split is $C_{n+1}$"', run=_run_fcc_cycles, subject="fs(C_n), 3<=n<=7"),
    _complete("fig2", r'Proposition "EC(claw)": "are the only critically claw-exist graphs"'),
    _complete("fig4", r'Proposition "EC(2k2)": "are the only critically $2K_{2}$-exist graphs"'),
    _complete("fig6", r'Proposition "EC(P4)": "are the only critically $P_{4}$-exist graphs"'),
    _complete("fig7", r'Proposition "EC(C4)": "are the only critically $C_{4}$-exist graphs"'),
    _complete("fig9", r'Proposition "EC(C5)": "are the only critically $C_{5}$-exist graphs"'),
    _complete("fig10", r'Figure "EC(split)": "Critically non-split graphs"'),
    _complete("fig11", r'Figure "EC(Pseudo-split)": "The critically non-pseudo-split graphs"'),
    _complete("fig12", r'Figure "EC(thershold)": "The critically non-thershold graphs"'),
    _char("claw", "fig2", r'Theorem "claw-free characterization": "The graph $G$ is claw-free if and only if '
          r'any $G$-contraction is claw-free"'),
    _char("2k2", "fig4", r'Theorem "2K2-free characterization": "The graph $G$ is $2K_{2}$-free if and only if '
          r'any $G$-contraction is $2K_{2}$-free"'),
    _char("p4", "fig6", r'Theorem "P4-free characterization": "The graph $G$ is $P_{4}$-free if and only if '
          r'any $G$-contraction is $P_{4}$-free"'),
    _char("c4", "fig7", r'Theorem "C4-free characterization": "The graph $G$ is $C_{4}$-free if and only if '
          r'any $G$-contraction is $C_{4}$-free"'),
    _char("c5", "fig9", r'Theorem "C5-free characterization": "The graph $G$ is $C_{5}$-free if and only if '
          r'any $G$-contraction is $C_{5}$-free"'),
    _char("split", "fig10", r'Theorem "split characterization short form": "The graph $G$ is split if and only '
          r'if any $G$-contraction is split"'),
    _char("pseudo_split", "fig11", r'Theorem "Pseudo-split characterization short form": "The graph $G$ is '
          r'Pseudo-split if and only if any $G$-contraction is Pseudo-split"'),
    _char("threshold", "fig12", r'Theorem "split characterization short form1": "The graph $G$ is threshold if '
          r'and only if any $G$-contraction is threshold"'),
    Claim("char_general", r'Theorem "Theorem: characeterization": "The graph $G$ is $\mathcal{H}$-free if and only '
          r'if any $G$-contraction is $\mathcal{H}$-free"', check=_check_char_general, nmax=7),
    Claim("split_oracle", r'Theorem "split graph hammer charcaterization": "A graph $G$ is split if and only if '
          r'$G$ is $\{2K_{2}, C_{4}, C_{5}\}$-free"', check=_check_split_oracle, exclude_isolated=False),
    Claim("threshold_oracle", r'Theorem "threshold graph chvtal charcaterization": "A given a graph $G$ is '
          r'threshold if and only if $G$ is $\{2K_{2}$, $P_{4}$, $C_{4}\}$-free"',
          check=_check_threshold_oracle, exclude_isolated=False),
    Claim("split_closed", r'Section "split": "The class of split graphs is a closed class under edge contraction"',
          check=_check_split_closed, exclude_isolated=False),
    Claim("enumeration_counts", "one representative per isomorphism class", run=_run_enumeration_counts,
          subject="class counts"),
    Claim("figure_instances", "every drawn instance has the property its figure names",
          run=_run_figure_instances, subject="figure instances"),
]

CLAIMS: dict[str, Claim] = {claim.id: claim for claim in _REGISTRY}


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError as e:
        raise UnknownNameError("claim", claim_id, list(CLAIMS) + ["all"]) from e


def expand_claims(spec: str) -> list[str]:
    """Comma-separated claim ids; 'all' means every registered claim in registry order."""
    ids = []
    for part in (p.strip() for p in spec.split(",")):
        if not part:
            continue
        if part == "all":
            ids.extend(CLAIMS)
        else:
            ids.append(get_claim(part).id)
    return list(dict.fromkeys(ids))


# -------------------------
# scanning
# -------------------------
def _claim_test(claim_id: str, g: Graph) -> bool | None:
    claim = CLAIMS[claim_id]
    test = claim.check if claim.check is not None else claim.select
    return test(g)


def _scan_chunk(task: tuple[Callable[[Graph], bool | None], tuple[Graph, ...]]) -> list[bool | None]:
    test, graphs = task
    return [test(g) for g in graphs]


def scan(test: Callable[[Graph], bool | None], space: GraphSpace, bounds: Bounds,
         desc: str = "scan") -> list[tuple[Graph, bool | None]]:
    """
    Apply a picklable per-graph test to the whole space; results come back in space order.

    Chunks go to a process pool when more than one worker is requested.
    """
    graphs = list(space)
    tasks = [(test, tuple(graphs[k:k + CHUNK_SIZE])) for k in range(0, len(graphs), CHUNK_SIZE)]
    bar = {"total": len(tasks), "desc": desc, "unit": "chunk", "disable": not bounds.progress, "leave": False}

    if bounds.workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(processes=bounds.workers) as pool:
            # imap keeps chunk order, so reports do not depend on the worker count
            chunks = list(tqdm(pool.imap(_scan_chunk, tasks), **bar))
    else:
        chunks = [_scan_chunk(task) for task in tqdm(tasks, **bar)]

    results = [r for chunk in chunks for r in chunk]
    return list(zip(graphs, results))


def verify(claim_id: str, bounds: Bounds | None = None) -> VerificationReport:
    bounds = bounds or Bounds()
    claim = get_claim(claim_id)
    log.info("Checking %s", claim.id)
    start = time.perf_counter()

    if claim.run is not None:
        verified, failures = claim.run(bounds)
        space = claim.subject
    else:
        graph_space = claim.space_for(bounds)
        space = graph_space.describe()
        results = scan(partial(_claim_test, claim.id), graph_space, bounds, claim.id)
        if claim.check is not None:
            verified = sum(1 for _, r in results if r)
            failures = [str(g) for g, r in results if r is False]
        else:
            found = Family.from_graphs((g for g, r in results if r), allow_isolated=True)
            verified, failures = _compare(found, claim.expected(graph_space.n_max))
            space = f"{claim.subject}, {space}"

    elapsed = time.perf_counter() - start
    if failures:
        log.info("%s: %d counterexamples", claim.id, len(failures))
    return VerificationReport(
        claim.id, claim.anchor, space, verified,
        tuple(failures[:bounds.counterexample_cap]), len(failures), elapsed,
        )


def verify_many(claim_ids: Iterable[str], bounds: Bounds | None = None) -> list[VerificationReport]:
    return [verify(claim_id, bounds) for claim_id in claim_ids]


# -------------------------
# rendering
# -------------------------
def render_text(reports: list[VerificationReport], timing: bool = False) -> str:
    lines = []
    for r in reports:
        status = "PASS" if r.success else "FAIL"
        took = f" in {r.elapsed:.2f}s" if timing else ""
        lines.append(f"{status} {r.claim}: {r.verified} verified over {r.space}{took}")
        lines.append(f"     {r.anchor}")
        for witness in r.counterexamples:
            lines.append(f"     counterexample {witness}")
        if r.found > len(r.counterexamples):
            lines.append(f"     ... {r.found - len(r.counterexamples)} more")
    failed = sum(1 for r in reports if not r.success)
    lines.append(f"{len(reports)} claims, {len(reports) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n"


def render_records(reports: list[VerificationReport], timing: bool = False) -> str:
    lines = []
    for r in reports:
        record = {
            "claim": r.claim,
            "anchor": r.anchor,
            "status": "pass" if r.success else "fail",
            "verified": r.verified,
            "found": r.found,
            "counterexamples": list(r.counterexamples),
            "space": r.space,
        }
        if timing:
            record["elapsed"] = round(r.elapsed, 3)
        lines.append(json.dumps(record))
    return "\n".join(lines) + "\n" if lines else ""


def critical_graphs(fam: Family, space: GraphSpace, bounds: Bounds | None = None) -> list[Graph]:
    """Critically fam-exist graphs of the space, in space order."""
    bounds = bounds or Bounds()
    results = scan(partial(critically_exist, fam=fam), space, bounds, "critical")
    return [g for g, hit in results if hit]
