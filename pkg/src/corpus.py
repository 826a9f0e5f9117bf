"""corpus.py"""
from __future__ import annotations

import logging
import os
from pathlib import Path

from families import FIGURES, figure_instances
from graph import Graph, Graph6Error, parse_graph6, write_graph6
from hfree import Family
from utils import ensure_dir

log = logging.getLogger(__name__)

SUFFIX = ".g6"


class CorpusLineError(Graph6Error):
    """graph6 problem located at a line of a corpus file."""

    def __init__(self, origin: str, line: int, cause: Graph6Error):
        self.origin = origin
        self.line = line
        self.cause = cause
        super().__init__(f"{origin}:{line}: {cause}")


def parse_lines(lines, origin: str = "<input>") -> list[tuple[Graph, str]]:
    """
    Graphs from graph6 lines, each paired with the '#' comment directly above it.

    Blank lines reset the pending comment.
    """
    graphs = []
    comment = ""
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            comment = ""
            continue
        if text.startswith("#"):
            comment = text.lstrip("#").strip()
            continue
        try:
            graphs.append((parse_graph6(text), comment))
        except Graph6Error as e:
            raise CorpusLineError(origin, number, e) from e
        comment = ""
    return graphs


def read_family_file(path: str | Path) -> Family:
    path = Path(path)
    with path.open(encoding="ascii", errors="surrogateescape") as file:
        entries = parse_lines(file.read().splitlines(), str(path))
    return Family.from_graphs((g for g, _ in entries), (label for _, label in entries), allow_isolated=True)


def format_family(fam: Family, title: str = "") -> str:
    lines = [f"# {title}"] if title else []
    for g, name in zip(fam.members, fam.names):
        if name:
            lines.append(f"# {name}")
        lines.append(write_graph6(g))
    return "\n".join(lines) + "\n"


def write_family_file(path: str | Path, fam: Family, title: str = "") -> None:
    path = Path(path)
    ensure_dir(str(path.parent))
    with path.open("w", encoding="ascii") as file:
        file.write(format_family(fam, title))
    log.info("Wrote %d graphs to %s", len(fam), path)


def write_figure_corpus(directory: str | Path, vertex_bound: int = 9) -> list[Path]:
    """One file per figure, every instance within vertex_bound, parameters as comments."""
    written = []
    for figure in FIGURES.values():
        instances = figure_instances(figure.id, vertex_bound)
        fam = Family.from_graphs((g for _, g in instances), (spec.label() for spec, _ in instances))
        path = Path(directory) / f"{figure.id}{SUFFIX}"
        write_family_file(path, fam, f"{figure.id}: {figure.title}")
        written.append(path)
    return written


def golden_path(directory: str | Path, figure_id: str) -> Path:
    return Path(directory) / f"{figure_id}{SUFFIX}"


def matches_golden(fam: Family, directory: str | Path, figure_id: str) -> bool:
    """Same isomorphism classes as the stored file, ignoring order and labelling."""
    path = golden_path(directory, figure_id)
    if not os.path.isfile(path):
        raise FileNotFoundError(f"No golden file for {figure_id} at {path}")
    return read_family_file(path) == fam
