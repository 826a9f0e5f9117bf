import networkx as nx
import pytest

from canon import canonical_form
from enumeration import KNOWN_COUNTS, GraphSpace, brute_force_classes, enumerate_graphs
from graph import Graph


@pytest.mark.parametrize("n", range(8))
def test_class_counts(n):
    assert len(enumerate_graphs(n).level(n)) == KNOWN_COUNTS[n]


@pytest.mark.slow
def test_class_count_on_eight_vertices():
    assert len(enumerate_graphs(8).level(8)) == KNOWN_COUNTS[8]


@pytest.mark.parametrize("n", range(6))
def test_levels_match_brute_force(n):
    ours = {canonical_form(g) for g in enumerate_graphs(n).level(n)}
    assert ours == {canonical_form(g) for g in brute_force_classes(n)}


def test_levels_match_graph_atlas():
    atlas: dict[int, set] = {}
    for other in nx.graph_atlas_g():
        n = other.number_of_nodes()
        if n > 6:
            break
        atlas.setdefault(n, set()).add(canonical_form(Graph.from_edges(n, other.edges())))
    for n, forms in atlas.items():
        assert {canonical_form(g) for g in enumerate_graphs(n).level(n)} == forms


def test_levels_hold_canonical_representatives_in_order():
    level = enumerate_graphs(5).level(5)
    forms = [canonical_form(g) for g in level]
    assert forms == sorted(forms)
    assert all(form.graph() == g for form, g in zip(forms, level))


def test_isolated_vertices_can_be_excluded():
    space = enumerate_graphs(4, exclude_isolated=True)
    assert space.counts() == {0: 1, 1: 0, 2: 1, 3: 2, 4: 7}
    assert len(space) == 11
    assert all(not g.isolated_vertices() for g in space)
    assert len(enumerate_graphs(4)) == 19


def test_space_bounds():
    assert [g.n for g in GraphSpace(3, n_min=3)] == [3, 3, 3, 3]
    with pytest.raises(ValueError):
        GraphSpace(10)
    with pytest.raises(ValueError):
        GraphSpace(4, n_min=-1)


def test_space_description():
    assert enumerate_graphs(8, exclude_isolated=True).describe() == "graphs 0<=n<=8, no isolated vertices"
    assert GraphSpace(5, n_min=2).describe() == "graphs 2<=n<=5"


def test_brute_force_limit():
    with pytest.raises(ValueError):
        brute_force_classes(7)
