import io
import logging

from utils import UnknownNameError, iter_bits, read_lines, setup_logging, to_bits


def test_bits():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []
    assert to_bits([5, 0, 3]) == 0b101001


def test_read_lines_mixes_arguments_files_and_stdin(tmp_path):
    listing = tmp_path / "graphs.g6"
    listing.write_text("# header\nCl\n\n  Bw  \n")
    stdin = io.StringIO("Cs\n")
    assert list(read_lines(["Dhc", str(listing), "-"], stdin)) == [
        ("<argument>", 1, "Dhc"),
        (str(listing), 2, "Cl"),
        (str(listing), 4, "Bw"),
        ("<stdin>", 1, "Cs"),
    ]


def test_read_lines_keeps_non_ascii_bytes_on_their_line(tmp_path):
    listing = tmp_path / "graphs.g6"
    listing.write_bytes("# café\nCl\né\n".encode("utf-8"))
    entries = list(read_lines([str(listing)]))
    assert entries[0] == (str(listing), 2, "Cl")
    origin, number, text = entries[1]
    assert (origin, number) == (str(listing), 3)
    assert text.encode("ascii", errors="surrogateescape") == "é".encode("utf-8")


def test_read_lines_defaults_to_stdin():
    assert list(read_lines([], io.StringIO("\n@\n"))) == [("<stdin>", 2, "@")]


def test_unknown_name_message():
    error = UnknownNameError("claim", "x", ["b", "a"])
    assert error.choices == ["a", "b"]
    assert str(error) == "Unknown claim 'x'; expected one of: a, b"


def test_setup_logging_levels():
    setup_logging(debug=True)
    assert logging.getLogger().level == logging.DEBUG
    setup_logging()
    assert logging.getLogger().level == logging.WARNING
