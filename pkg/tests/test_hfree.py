import itertools
import logging

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from canon import is_isomorphic
from corpus import read_family_file
from families import (
    bull,
    claw,
    complete_bipartite,
    cycle,
    gem,
    get_figure,
    house,
    named,
    path,
    two_k2,
)
from graph import Edge, Graph, disjoint_union, induced, permute
from hfree import (
    CheckOutcome,
    CriticalEdgeQuery,
    Family,
    SplitSpec,
    characterization_check,
    critical_structure_violations,
    critically_exist,
    elm,
    f_map,
    find_family_member,
    find_induced,
    fs,
    induced_copies,
    is_almost_dominating,
    is_critically_h_exist,
    is_h_critical_by_corners,
    is_h_critical_for,
    is_h_critical_in,
    is_h_free,
    is_h_split,
    is_strongly_h_free,
    is_strongly_h_free_by_fs,
    splitting_family,
    splitting_graph,
    splitting_one,
    splitting_vertex,
    unique_2k2_criticality_check,
)
from strategies import graphs


def fam(*graphs_) -> Family:
    return Family.from_graphs(graphs_)


# -------------------------
# families
# -------------------------
def test_family_drops_isomorphic_duplicates():
    f = Family.from_graphs([path(3), permute(path(3), [1, 0, 2]), cycle(3)], ["a", "b", "c"])
    assert len(f) == 2
    assert f.names == ("a", "c")
    assert permute(cycle(3), [2, 0, 1]) in f
    assert path(4) not in f


def test_family_equality_ignores_order_and_labels():
    assert fam(cycle(4), claw()) == fam(claw(), permute(cycle(4), [1, 2, 3, 0]))
    assert fam(cycle(4)) != fam(cycle(5))
    assert hash(fam(cycle(4), claw())) == hash(fam(claw(), cycle(4)))


def test_family_rejects_isolated_vertices_unless_allowed():
    k2_k1 = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(ValueError):
        Family.from_graphs([k2_k1])
    assert len(Family.from_graphs([k2_k1], allow_isolated=True)) == 1


def test_family_name_count_must_match():
    with pytest.raises(ValueError):
        Family.from_graphs([claw()], ["a", "b"])


def test_family_label_falls_back_to_graph6():
    f = Family.from_graphs([claw(), cycle(4)], ["claw", ""])
    assert f.label(0) == "claw"
    assert f.label(1) == "Cl"


# -------------------------
# induced subgraphs
# -------------------------
def test_find_induced_returns_least_witness():
    assert find_induced(cycle(5), path(4)) == 0b01111
    assert find_induced(cycle(4), path(4)) is None
    assert find_induced(claw(), Graph.empty(0)) == 0


def test_induced_copies_counts():
    assert len(list(induced_copies(complete_bipartite(1, 4), claw()))) == 4
    assert len(list(induced_copies(cycle(6), two_k2()))) == 3


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=7))
def test_induced_copies_match_exhaustive_search(g):
    for h in (path(3), two_k2(), claw()):
        expected = [
            sum(1 << v for v in subset)
            for subset in itertools.combinations(range(g.n), h.n)
            if is_isomorphic(induced(g, sum(1 << v for v in subset)), h)
        ]
        assert sorted(induced_copies(g, h)) == sorted(expected)


def test_family_member_witness_follows_family_order():
    f = fam(cycle(4), path(3))
    assert find_family_member(path(4), f) == (1, 0b0111)
    assert find_family_member(Graph.from_edges(2, [(0, 1)]), f) is None
    assert is_h_free(cycle(5), fam(cycle(4), claw()))


def test_elm_keeps_minimal_members():
    assert elm(fam(path(3), path(4))) == fam(path(3))
    reduced = elm(Family.from_graphs([claw(), complete_bipartite(1, 4), bull()], ["claw", "k1,4", "bull"]))
    assert reduced.names == ("claw", "bull")


def test_elm_is_idempotent():
    mixed = Family.from_graphs([claw(), bull(), path(4), two_k2(), cycle(5)])
    assert elm(mixed) == fam(claw(), path(4), two_k2())
    for family in (mixed, fam(path(3), path(4), cycle(4)), fam(claw(), complete_bipartite(1, 4))):
        assert elm(elm(family)) == elm(family)


@settings(max_examples=50, deadline=None)
@given(st.lists(graphs(1, 5), min_size=1, max_size=4))
def test_elm_is_idempotent_on_random_families(members):
    reduced = elm(Family.from_graphs(members, allow_isolated=True))
    assert elm(reduced) == reduced


# -------------------------
# splitting
# -------------------------
def test_splitting_one_turns_p3_into_p4():
    g = splitting_one(SplitSpec(path(3), 1, 0b001, 0b100))
    assert g == Graph.from_edges(4, [(0, 1), (1, 3), (2, 3)])


def test_split_spec_must_cover_the_neighborhood():
    with pytest.raises(ValueError):
        SplitSpec(path(3), 1, 0b001, 0b000)
    with pytest.raises(ValueError):
        SplitSpec(path(3), 1, 0b011, 0b100)


def test_splitting_vertex_of_k2_endpoint():
    assert splitting_vertex(Graph.from_edges(2, [(0, 1)]), 0) == fam(path(3), cycle(3))


def test_splitting_skips_isolated_vertex(caplog):
    k2_k1 = Graph.from_edges(3, [(0, 1)])
    with caplog.at_level(logging.WARNING, logger="hfree"):
        assert len(splitting_vertex(k2_k1, 2)) == 0
    assert "isolated vertex 2" in caplog.text


@pytest.mark.parametrize("host, figure_id", [("claw", "fig1"), ("c4", "fig5"), ("c5", "fig8")])
def test_splitting_matches_stored_figures(host, figure_id, corpus_dir):
    assert splitting_graph(named(host)) == read_family_file(corpus_dir / f"{figure_id}.g6")


def test_splitting_of_2k2():
    expected = fam(named("p2+c3"), named("p2+p3"))
    assert splitting_graph(two_k2()) == expected
    assert splitting_family(fam(two_k2())) == expected


def test_splitting_family_is_union():
    assert splitting_family(fam(claw(), cycle(4))) == Family.from_graphs(
        list(splitting_graph(claw())) + list(splitting_graph(cycle(4)))
        )


def test_is_h_split():
    assert is_h_split(complete_bipartite(1, 4), fam(claw()))
    assert is_h_split(named("p2+c3"), fam(two_k2()))
    assert not is_h_split(claw(), fam(claw()))


@pytest.mark.parametrize("host, expected", [
    (claw(), [bull()]),
    (two_k2(), []),
    (path(4), []),
    (cycle(3), [cycle(4)]),
    (cycle(4), [cycle(5)]),
    (cycle(5), [cycle(6)]),
])
def test_free_split_graphs(host, expected):
    assert fs(fam(host)) == Family.from_graphs(expected)


# -------------------------
# contraction predicates
# -------------------------
def test_strongly_free():
    claws = fam(claw())
    assert is_strongly_h_free(cycle(5), claws)
    assert not is_strongly_h_free(bull(), claws)
    assert not is_strongly_h_free_by_fs(bull(), claws)
    with pytest.raises(ValueError):
        is_strongly_h_free(claw(), claws)
    with pytest.raises(ValueError):
        is_strongly_h_free_by_fs(claw(), claws)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_strongly_free_by_contraction_and_by_fs_agree(g):
    claws = fam(claw())
    assume(is_h_free(g, claws))
    assert is_strongly_h_free(g, claws) == is_strongly_h_free_by_fs(g, claws, fam(bull()))


def test_critically_exist():
    p4 = fam(path(4))
    for g in (path(4), cycle(5), house(), gem()):
        assert is_critically_h_exist(g, p4)
    assert not is_critically_h_exist(path(5), p4)
    assert not is_critically_h_exist(cycle(4), p4)
    assert is_critically_h_exist(claw(), fam(claw()))
    with pytest.raises(ValueError):
        is_critically_h_exist(disjoint_union(claw(), Graph.empty(1)), fam(claw()))


# -------------------------
# critical edges
# -------------------------
def test_f_map():
    c4 = cycle(4)
    assert f_map(c4, (0, 1), 0b1101) == 0b111
    assert f_map(c4, (0, 1), 0b1100) == 0b110
    assert f_map(c4, (1, 0), 0b0010) == 0b001


def test_edge_inside_set_is_critical():
    q = CriticalEdgeQuery(path(4), 0b0111, Edge(0, 1))
    assert is_h_critical_for(q)
    assert is_h_critical_by_corners(q)


def test_dominated_outside_endpoint_is_not_critical():
    q = CriticalEdgeQuery(path(4), 0b0111, Edge(2, 3), path(3))
    assert q.reference == path(3)
    assert not is_h_critical_for(q)
    assert not is_h_critical_by_corners(q)


def test_edge_outside_set_is_not_critical():
    q = CriticalEdgeQuery(path(5), 0b00111, Edge(3, 4))
    assert not is_h_critical_for(q)
    assert not is_h_critical_by_corners(q)


def test_every_edge_critical_for_the_2k2_of_a_blowup():
    g = get_figure("fig4").members[4].build((1, 1, 1))
    assert g.n == 7
    for e in g.edges():
        q = CriticalEdgeQuery(g, 0b1111, e, two_k2())
        assert is_h_critical_for(q)
        assert is_h_critical_by_corners(q)


def test_critical_edge_query_validation():
    with pytest.raises(ValueError):
        CriticalEdgeQuery(path(4), 0b0111, Edge(0, 2))
    with pytest.raises(ValueError):
        CriticalEdgeQuery(path(4), 0b0111, Edge(0, 1), cycle(3))


def test_critical_in_every_copy():
    assert is_h_critical_in(cycle(4), path(3), (0, 1))
    assert not is_h_critical_in(path(4), path(3), (2, 3))
    assert is_h_critical_in(cycle(4), cycle(5), (0, 1))


def test_critical_in_cycle_and_path():
    c6 = cycle(6)
    assert all(is_h_critical_in(c6, two_k2(), tuple(e)) for e in c6.edges())
    p5 = path(5)
    assert [is_h_critical_in(p5, path(4), tuple(e)) for e in p5.edges()] == [False, True, True, False]


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_semantic_and_corner_criticality_agree(g):
    for h in (path(3), two_k2()):
        for s in induced_copies(g, h):
            for e in g.edges():
                q = CriticalEdgeQuery(g, s, e, h)
                assert is_h_critical_for(q) == is_h_critical_by_corners(q)


def test_almost_dominating():
    assert is_almost_dominating(path(4), (1, 2))
    assert not is_almost_dominating(two_k2(), (0, 1))
    with pytest.raises(ValueError):
        is_almost_dominating(path(4), (0, 2))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_2k2_free_iff_every_edge_almost_dominating(g):
    assert is_h_free(g, fam(two_k2())) == all(is_almost_dominating(g, e) for e in g.edges())


def test_no_violations_in_critical_graph():
    assert critical_structure_violations(cycle(5), fam(path(4))) == []
    assert critical_structure_violations(claw(), fam(claw())) == []


def test_violations_in_the_chair():
    chair = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4)])
    problems = critical_structure_violations(chair, fam(claw()))
    assert len(problems) == 2
    assert "4 is a corner dominated by 1" in problems[0]
    assert "forbidden neighborhood [1]" in problems[1]


# -------------------------
# characterization checks
# -------------------------
def test_characterization_check():
    claws = fam(claw())
    assert characterization_check(cycle(5), claws) == CheckOutcome(True, True)
    assert characterization_check(claw(), claws) == CheckOutcome(False, True)
    assert characterization_check(bull(), claws, fam(bull())).applies is False


def test_unique_2k2_criticality_check():
    assert unique_2k2_criticality_check(two_k2()) == CheckOutcome(True, True)
    assert unique_2k2_criticality_check(cycle(6)).applies is False
    assert unique_2k2_criticality_check(cycle(4)).applies is False
