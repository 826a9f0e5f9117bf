"""utils.py"""
import logging
import os
import sys
from typing import Iterable, Iterator, TextIO


def ensure_dir(path: str) -> None:
    os.makedirs(path, exist_ok=True)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set positions of a bitset in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_bits(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def setup_logging(debug: bool = False) -> None:
    """Send log records to stderr so stdout stays reserved for results."""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        format="[%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def read_lines(sources: list[str], stdin: TextIO = sys.stdin) -> Iterator[tuple[str, int, str]]:
    """
    Yield (origin, line number, text) for graph inputs.

    Each source is a graph6 string, a file path, or '-' for standard input.
    Blank lines and '#' comments are skipped; line numbers stay 1-based.
    """
    if not sources:
        sources = ["-"]
    for src in sources:
        if src == "-":
            lines = stdin.read().splitlines()
            origin = "<stdin>"
        elif os.path.isfile(src):
            with open(src, encoding="ascii", errors="surrogateescape") as file:
                lines = file.read().splitlines()
            origin = src
        else:
            yield "<argument>", 1, src
            continue

        for number, line in enumerate(lines, start=1):
            text = line.strip()
            if text and not text.startswith("#"):
                yield origin, number, text


class UnknownNameError(KeyError):
    """Lookup of a family token, figure id, claim id or graph name that does not exist."""

    def __init__(self, kind: str, name: str, choices: Iterable[str]):
        self.kind = kind
        self.name = name
        self.choices = sorted(choices)
        super().__init__(name)

    def __str__(self) -> str:
        return f"Unknown {self.kind} {self.name!r}; expected one of: {', '.join(self.choices)}"
