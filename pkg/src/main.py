#!/usr/bin/env python3
"""main.py"""

import json
import logging
import sys

from docopt import DocoptExit, docopt

import utils
from corpus import write_figure_corpus
from enumeration import enumerate_graphs
from families import family, is_pseudo_split, is_split, is_threshold
from graph import Graph6Error, contract, parse_graph6, write_graph6
from hfree import (
    Family,
    critically_exist,
    find_family_member,
    fs,
    is_h_split,
    is_strongly_h_free,
    splitting_family,
)
from settings import Settings
from verify import Bounds, critical_graphs, expand_claims, render_records, render_text, verify_many

log = logging.getLogger(__name__)

USAGE = """
Edge-contraction stability of H-free graphs.

Usage:
  main.py check --family=F [options] [<graph>...]
  main.py contract [options] <graph> <u> <v>
  main.py splitting [options] [<graph>...]
  main.py fs [options] [<graph>...]
  main.py critical --family=F [options]
  main.py enumerate [options]
  main.py verify [options]
  main.py corpus [options]
  main.py (-h | --help)

Graphs are graph6 strings, files with one graph6 per line, or - for
standard input (the default).

Options:
  -h --help       Show this screen.
  --family=F      Comma-separated tokens: claw, c3, 2k2, p4, c4, c5,
                  split, pseudo_split, threshold.
  --nmax=N        Largest vertex count to scan (settings: [verify] nmax).
  --workers=W     Worker processes for critical and verify
                  (settings: [verify] workers).
  --claim=C       Comma-separated claim ids, or all [default: all].
  --format=FMT    text or records [default: text].
  --corpus=DIR    Corpus directory (else HFREE_CORPUS_DIR, else settings).
  --isolated      Keep graphs with isolated vertices.
  --timing        Report elapsed time per claim.
  --progress      Progress bars on standard error.
  --debug         Debug logging on standard error.
"""

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_INTERRUPTED = 130


class UsageError(Exception):
    """Bad arguments or input; reported on standard error with exit status 2."""


class HFreeCli:
    """
    Main class of the command-line front end.
    """
    def __init__(self, argv, stdin=None, stdout=None):
        """
        Parse arguments and load settings.
        """
        Settings.initialize()
        self.args = docopt(USAGE, argv=argv, help=True)
        self.stdin = stdin or sys.stdin
        self.stdout = stdout or sys.stdout

        debug = self.args["--debug"] or Settings.get_bool('app', 'debug')
        utils.setup_logging(debug)
        log.debug("Settings from %s", Settings.get_settings_path())

        fmt = self.args["--format"]
        if fmt not in ("text", "records"):
            raise UsageError(f"--format must be text or records, got {fmt!r}")
        self.records = fmt == "records"

    # -------------------------
    # helpers
    # -------------------------
    def write(self, text: str) -> None:
        self.stdout.write(text)

    def emit(self, record: dict) -> None:
        self.write(json.dumps(record) + "\n")

    def graphs(self) -> list:
        """Parse every graph input, failing with the 1-based line number."""
        out = []
        for origin, number, text in utils.read_lines(self.args["<graph>"], self.stdin):
            try:
                out.append(parse_graph6(text))
            except Graph6Error as e:
                raise UsageError(f"{origin}:{number}: {e}") from e
        return out

    def int_option(self, name: str, section: str, option: str) -> int:
        value = self.args[name]
        if value is None:
            return Settings.get_int(section, option)
        if not value.isdigit():
            raise UsageError(f"{name} must be a non-negative integer, got {value!r}")
        return int(value)

    def bounds(self) -> Bounds:
        try:
            return Bounds(
                nmax=self.int_option("--nmax", 'verify', 'nmax'),
                workers=self.int_option("--workers", 'verify', 'workers'),
                counterexample_cap=Settings.get_int('verify', 'counterexample_cap'),
                figure_vertex_bound=Settings.get_int('verify', 'figure_vertex_bound'),
                progress=self.args["--progress"] or Settings.get_bool('app', 'progress'),
                )
        except ValueError as e:
            raise UsageError(str(e)) from e

    def selected_family(self) -> Family:
        return family(self.args["--family"])

    def print_graphs(self, graphs) -> None:
        for g in graphs:
            if self.records:
                self.emit({"graph": write_graph6(g), "n": g.n})
            else:
                self.write(write_graph6(g) + "\n")

    # -------------------------
    # verbs
    # -------------------------
    def check(self) -> int:
        """Per-graph properties against one family."""
        fam = self.selected_family()
        label = self.args["--family"]
        for g in self.graphs():
            witness = find_family_member(g, fam)
            free = witness is None
            strongly = is_strongly_h_free(g, fam) if free else None
            critical = None if g.isolated_vertices() else critically_exist(g, fam)
            result = {
                "graph": write_graph6(g),
                "free": free,
                "witness": None if free else {
                    "member": fam.label(witness[0]),
                    "vertices": list(utils.iter_bits(witness[1])),
                    },
                "strongly_free": strongly,
                "critically_exist": critical,
                "split_of_family": is_h_split(g, fam),
                "split": is_split(g),
                "pseudo_split": is_pseudo_split(g),
                "threshold": is_threshold(g),
            }
            if self.records:
                self.emit({"family": label, **result})
                continue

            found = "" if free else f" (member {result['witness']['member']} at {result['witness']['vertices']})"
            self.write(
                f"{result['graph']}\n"
                f"  {label}-free: {free}{found}\n"
                f"  strongly {label}-free: {_show(strongly)}\n"
                f"  critically {label}-exist: {_show(critical)}\n"
                f"  {label}-split: {result['split_of_family']}\n"
                f"  split: {result['split']}\n"
                f"  pseudo-split: {result['pseudo_split']}\n"
                f"  threshold: {result['threshold']}\n"
                )
        return EXIT_OK

    def contract(self) -> int:
        """Contract one edge of one graph."""
        try:
            arg = self.args["<graph>"]
            g = parse_graph6(arg[0] if isinstance(arg, list) else arg)
        except Graph6Error as e:
            raise UsageError(f"<argument>:1: {e}") from e
        try:
            u, v = int(self.args["<u>"]), int(self.args["<v>"])
            result = contract(g, (u, v))
        except ValueError as e:
            raise UsageError(str(e)) from e

        if self.records:
            self.emit({
                "graph": write_graph6(g),
                "edge": list(result.edge),
                "contracted": write_graph6(result.graph),
                "merged": result.merged,
                })
        else:
            self.write(write_graph6(result.graph) + "\n")
        return EXIT_OK

    def splitting(self) -> int:
        """splitting(H) for the family of input graphs."""
        hosts = Family.from_graphs(self.graphs(), allow_isolated=True)
        self.print_graphs(splitting_family(hosts).members)
        return EXIT_OK

    def free_split(self) -> int:
        """fs(H) for the family of input graphs."""
        hosts = Family.from_graphs(self.graphs(), allow_isolated=True)
        self.print_graphs(fs(hosts).members)
        return EXIT_OK

    def critical(self) -> int:
        """Every critically F-exist graph up to --nmax vertices."""
        fam = self.selected_family()
        bounds = self.bounds()
        space = enumerate_graphs(bounds.nmax, exclude_isolated=not self.args["--isolated"])
        self.print_graphs(critical_graphs(fam, space, bounds))
        return EXIT_OK

    def enumerate(self) -> int:
        """Class counts per vertex count."""
        bounds = self.bounds()
        space = enumerate_graphs(bounds.nmax, exclude_isolated=not self.args["--isolated"])
        if self.records:
            self.print_graphs(space)
            return EXIT_OK
        counts = space.counts()
        for n, count in counts.items():
            self.write(f"n={n}: {count}\n")
        self.write(f"total: {sum(counts.values())}\n")
        return EXIT_OK

    def verify(self) -> int:
        """Run the claim harness."""
        bounds = self.bounds()
        reports = verify_many(expand_claims(self.args["--claim"]), bounds)
        render = render_records if self.records else render_text
        self.write(render(reports, timing=self.args["--timing"]))
        return EXIT_OK if all(r.success for r in reports) else EXIT_COUNTEREXAMPLE

    def corpus(self) -> int:
        """Write one graph6 file per figure."""
        directory = Settings.corpus_directory(self.args["--corpus"])
        bound = Settings.get_int('verify', 'figure_vertex_bound')
        for written in write_figure_corpus(directory, bound):
            self.write(f"{written.name}\n")
        return EXIT_OK

    def run(self) -> int:
        """Dispatch the verb."""
        if self.args["check"]:
            return self.check()
        if self.args["contract"]:
            return self.contract()
        if self.args["splitting"]:
            return self.splitting()
        if self.args["fs"]:
            return self.free_split()
        if self.args["critical"]:
            return self.critical()
        if self.args["enumerate"]:
            return self.enumerate()
        if self.args["verify"]:
            return self.verify()
        return self.corpus()


def _show(value) -> str:
    return "n/a" if value is None else str(value)


def run(argv, stdin=None, stdout=None) -> int:
    """Run one command; returns the exit status."""
    try:
        return HFreeCli(argv, stdin, stdout).run()
    except DocoptExit as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    except (UsageError, KeyError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except KeyboardInterrupt:
        return EXIT_INTERRUPTED


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
