import itertools

import networkx as nx
from hypothesis import given, settings

from canon import (
    CanonicalForm,
    automorphism_orbits,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    is_isomorphic,
    orbit_representatives,
    rooted_form,
)
from families import bull, claw, cycle, path
from graph import Graph, permute
from strategies import graphs, graphs_with_permutation


def test_small_certificates():
    assert canonical_form(Graph.empty(0)).certificate == bytes([0])
    assert canonical_form(Graph.empty(1)).certificate == bytes([1])
    assert canonical_form(cycle(3)).certificate == bytes([3, 7])
    assert canonical_form(path(3)).certificate == bytes([3, 3])
    assert canonical_form(cycle(3)).hex() == "0307"


def test_form_rebuilds_representative():
    form = canonical_form(cycle(5))
    assert form.n == 5
    assert canonical_form(form.graph()) == form
    assert form.graph() == canonical_graph(cycle(5))


def test_forms_are_ordered_by_certificate():
    forms = sorted([canonical_form(cycle(3)), canonical_form(path(3)), canonical_form(Graph.empty(3))])
    assert [f.certificate for f in forms] == [bytes([3, 0]), bytes([3, 3]), bytes([3, 7])]
    assert CanonicalForm(bytes([2, 0])) < CanonicalForm(bytes([2, 1]))


@settings(max_examples=80, deadline=None)
@given(graphs_with_permutation(max_n=8))
def test_canonical_form_ignores_labelling(case):
    g, perm = case
    h = permute(g, perm)
    assert canonical_form(g) == canonical_form(h)
    assert canonical_graph(g) == canonical_graph(h)
    assert is_isomorphic(g, h)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_agrees_with_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(_to_nx(g), _to_nx(h))


def test_labeling_is_a_permutation():
    order = canonical_labeling(bull())
    assert sorted(order) == list(range(5))
    assert canonical_labeling(Graph.empty(0)) == []


def test_known_orbits():
    assert automorphism_orbits(cycle(5)) == [(0, 1, 2, 3, 4)]
    assert automorphism_orbits(path(4)) == [(0, 3), (1, 2)]
    assert automorphism_orbits(claw()) == [(0,), (1, 2, 3)]
    assert automorphism_orbits(bull()) == [(0, 1), (2,), (3, 4)]
    assert automorphism_orbits(Graph.empty(0)) == []
    assert orbit_representatives(bull()) == [0, 2, 3]


def test_rooted_forms_separate_orbits():
    p4 = path(4)
    assert rooted_form(p4, 0) == rooted_form(p4, 3)
    assert rooted_form(p4, 0) != rooted_form(p4, 1)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_orbits_match_brute_force_automorphisms(g):
    edges = set(g.edges())
    orbit_of = {v: {v} for v in range(g.n)}
    for perm in itertools.permutations(range(g.n)):
        if all(tuple(sorted((perm[a], perm[b]))) in edges for a, b in edges):
            for v in range(g.n):
                orbit_of[v].add(perm[v])
    expected = sorted({tuple(sorted(orbit)) for orbit in orbit_of.values()})
    assert automorphism_orbits(g) == expected


def _to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out
