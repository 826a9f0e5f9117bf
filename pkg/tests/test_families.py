import pytest

from enumeration import enumerate_graphs
from families import (
    FAMILIES,
    FIGURES,
    BlowUp,
    FigureMember,
    cycle,
    complete,
    family,
    figure_free_family,
    figure_graphs,
    figure_instances,
    get_figure,
    is_pseudo_split,
    is_split,
    is_split_by_degrees,
    is_threshold,
    is_threshold_by_creation,
    named,
    named_graph,
    path,
    splittance,
    threshold_creation_sequence,
    two_k2,
    wheel4,
)
from graph import Graph
from hfree import Family, critically_exist, is_h_free
from utils import UnknownNameError


@pytest.mark.parametrize("name", [
    "claw", "bull", "2k2", "paw", "diamond", "house", "gem", "butterfly", "w4", "octahedron",
    "p2+c3", "p2+p3", "p1", "p5", "c3", "c7", "k1", "k4", "k2,3", "k3,3",
])
def test_named_graphs_have_their_degree_sequences(name):
    entry = named_graph(name)
    assert entry.graph.degree_sequence() == entry.degrees


def test_named_lookup_is_case_insensitive():
    assert named("Claw") == named("claw")
    assert named(" K2,3 ").n == 5


def test_unknown_graph_name():
    with pytest.raises(UnknownNameError) as info:
        named("petersen")
    assert isinstance(info.value, KeyError)
    assert "Unknown graph name 'petersen'" in str(info.value)
    assert "claw" in info.value.choices


def test_constructor_ranges():
    with pytest.raises(ValueError):
        path(0)
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        complete(13)


def test_family_tokens():
    assert len(FAMILIES["split"]) == 3
    assert FAMILIES["threshold"].names == ("2k2", "p4", "c4")
    assert family("c4,split") == Family.from_graphs([cycle(4), two_k2(), cycle(5)])
    assert family(" P4 , threshold ") == FAMILIES["threshold"]


def test_family_token_errors():
    with pytest.raises(ValueError):
        family(" , ")
    with pytest.raises(UnknownNameError):
        family("claw,bogus")


@pytest.mark.parametrize("g, expected", [
    (cycle(4), 1),
    (complete(4), 0),
    (two_k2(), 1),
    (cycle(5), 2),
    (Graph.empty(0), 0),
    (Graph.empty(3), 0),
])
def test_splittance(g, expected):
    assert splittance(g) == expected


def test_creation_sequences():
    assert threshold_creation_sequence(named("claw")) == "iiid"
    assert threshold_creation_sequence(cycle(3)) == "idd"
    assert threshold_creation_sequence(Graph.empty(0)) == ""
    assert threshold_creation_sequence(path(4)) is None


def test_split_recognition_agrees_with_degrees():
    for g in enumerate_graphs(6):
        assert is_split(g) == is_split_by_degrees(g)
        assert is_threshold(g) == is_threshold_by_creation(g)
        if is_threshold(g):
            assert is_split(g) and is_pseudo_split(g)


def test_pseudo_split_admits_c5():
    assert is_pseudo_split(cycle(5))
    assert not is_split(cycle(5))


def test_blowup_member_sizes():
    member = FigureMember("H", path(4), (BlowUp("W", (0, 2)), BlowUp("X", (1,), 1)))
    assert list(member.size_vectors(6)) == [(0, 1), (0, 2), (1, 1)]
    assert list(member.size_vectors(4)) == []
    g = member.build((1, 1))
    assert g.n == 6
    assert g.degrees()[4:] == (2, 1)


def test_figure_lookup():
    assert set(FIGURES) == {f"fig{k}" for k in (1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12)}
    assert get_figure("FIG6").subject == "p4"
    with pytest.raises(UnknownNameError):
        get_figure("fig3")


def test_small_p4_figure():
    graphs = figure_graphs("fig6", 5)
    assert len(graphs) == 5
    assert set(graphs.names) == {"H1", "H2", "H4 W=0", "H4 W=1", "H5 W=1"}
    assert path(4) in graphs


def test_figure_instance_labels():
    labels = [spec.label() for spec, _ in figure_instances("fig7", 6)]
    assert labels == ["H1 X=0", "H1 X=1", "H1 X=2", "H2", "H3"]


def test_figure_vertex_bound_limit():
    with pytest.raises(ValueError):
        figure_instances("fig1", 13)


def test_figure_free_family():
    assert figure_free_family("fig2") == Family.from_graphs([named("bull")])
    assert len(figure_free_family("fig6")) == 0


@pytest.mark.parametrize("figure_id", ["fig6", "fig7"])
def test_figure_instances_are_critical(figure_id):
    fam = FAMILIES[get_figure(figure_id).subject]
    for _, g in figure_instances(figure_id, 7):
        assert critically_exist(g, fam)


def test_wheel_is_c4_critical():
    assert not is_h_free(wheel4(), FAMILIES["c4"])
    assert critically_exist(wheel4(), FAMILIES["c4"])
