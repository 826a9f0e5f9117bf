"""enumeration.py"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from canon import canonical_form
from graph import MAXN, Graph

log = logging.getLogger(__name__)

# Largest n the exhaustive scans accept.
EXHAUSTIVE_LIMIT = 9

# Isomorphism classes of graphs on n = 0..9 vertices.
KNOWN_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668)


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    """
    One canonical representative per class on n vertices, in certificate order.

    Built by adding vertex n - 1 with every neighbor set to each class on
    n - 1 vertices; every graph arises this way, so keeping one graph per
    canonical form is exhaustive.
    """
    if n == 0:
        return (Graph.empty(0),)
    forms = set()
    for parent in _level(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = [row | ((nbrs >> i & 1) << (n - 1)) for i, row in enumerate(parent.adj)]
            rows.append(nbrs)
            forms.add(canonical_form(Graph(n, tuple(rows))))
    log.info("Enumerated %d classes on %d vertices", len(forms), n)
    return tuple(form.graph() for form in sorted(forms))


@dataclass(frozen=True)
class GraphSpace:
    """All isomorphism classes with n_min <= n <= n_max vertices."""
    n_max: int
    exclude_isolated: bool = False
    n_min: int = 0

    def __post_init__(self):
        if self.n_max > min(MAXN, EXHAUSTIVE_LIMIT):
            raise ValueError(f"Exhaustive enumeration is limited to n <= {EXHAUSTIVE_LIMIT}, got {self.n_max}")
        if self.n_min < 0:
            raise ValueError(f"n_min must be non-negative, got {self.n_min}")

    def level(self, n: int) -> tuple[Graph, ...]:
        graphs = _level(n)
        if self.exclude_isolated:
            return tuple(g for g in graphs if not g.isolated_vertices())
        return graphs

    def __iter__(self) -> Iterator[Graph]:
        for n in range(self.n_min, self.n_max + 1):
            yield from self.level(n)

    def counts(self) -> dict[int, int]:
        return {n: len(self.level(n)) for n in range(self.n_min, self.n_max + 1)}

    def __len__(self) -> int:
        return sum(self.counts().values())

    def describe(self) -> str:
        isolated = ", no isolated vertices" if self.exclude_isolated else ""
        return f"graphs {self.n_min}<=n<={self.n_max}{isolated}"


def enumerate_graphs(n_max: int, exclude_isolated: bool = False, n_min: int = 0) -> GraphSpace:
    return GraphSpace(n_max, exclude_isolated, n_min)


def brute_force_classes(n: int) -> list[Graph]:
    """
    Classes on n vertices by quotienting all labelled graphs under S_n.

    Representative = the labelled graph with the smallest edge bitmask.
    Feasible up to n = 6.
    """
    if n > 6:
        raise ValueError(f"Brute-force classes are only feasible for n <= 6, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))

    def relabel(mask: int, perm: tuple[int, ...]) -> int:
        out = 0
        for k, (a, b) in enumerate(pairs):
            if mask >> k & 1:
                x, y = perm[a], perm[b]
                out |= 1 << index[(x, y) if x < y else (y, x)]
        return out

    seen = set()
    classes = []
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        seen.update(relabel(mask, p) for p in perms)
        classes.append(Graph.from_edges(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1]))
    return classes
