import pytest
from hypothesis import given, settings

from oracles import graphs, naive_chi
from p2p4color.clique import clique_number
from p2p4color.colorers import COLORERS, StructureViolation, bound, color
from p2p4color.coloring import verify_coloring
from p2p4color.detect import GEM, P2_P4, is_in_class
from p2p4color.gen import CLASS_FORBIDDEN, named_graph
from p2p4color.graph import complete, cycle, mycielskian
from p2p4color.oracle import chromatic_number

CLASSES = sorted(COLORERS)


def test_bound_table():
    assert [bound("gem", w) for w in range(1, 6)] == [1, 4, 7, 10, 13]
    assert [bound("butterfly", w) for w in range(1, 6)] == [1, 4, 8, 13, 19]
    assert [bound("diamond", w) for w in range(1, 8)] == [1, 4, 7, 9, 9, 11, 13]
    assert bound("gem", 0) == 0
    with pytest.raises(ValueError):
        bound("house", 3)


@pytest.mark.parametrize("cls", CLASSES)
@pytest.mark.parametrize("w", [1, 2, 3, 5, 6])
def test_cliques_use_omega_colours(cls, w):
    c = color(complete(w), cls)
    assert c.colors_used == w <= c.bound


@pytest.mark.parametrize("cls", CLASSES)
def test_c5_within_four(cls):
    c = color(cycle(5), cls)
    assert verify_coloring(cycle(5), c) is None
    assert 3 <= c.colors_used <= 4 == c.bound


def test_grotzsch_is_tight():
    g = mycielskian(cycle(5))
    c = color(g, "diamond")
    assert verify_coloring(g, c) is None and c.colors_used == 4 == chromatic_number(g).chi


def test_two_k5s_traces_the_full_q_palette():
    c = color(named_graph("two-k5s"), "diamond")
    assert (c.arm, c.colors_used, c.bound) == ("omega>=5,|Q|=omega", 9, 9)


def test_k6_has_no_c12():
    c = color(complete(6), "diamond")
    assert c.arm == "omega>=5,|Q|<=1" and c.colors_used == 6 <= 11


def test_empty_graph():
    from p2p4color.graph import from_edge_list

    for cls in CLASSES:
        assert color(from_edge_list(0, []), cls).assignment == ()


def test_strict_gate_reports_witness():
    with pytest.raises(StructureViolation) as info:
        color(GEM.graph, "gem", strict=True)
    assert info.value.certificate.pattern.name == "gem"
    with pytest.raises(StructureViolation):
        color(P2_P4.graph, "diamond", strict=True)


def test_unknown_class():
    with pytest.raises(ValueError):
        color(complete(3), "house")


@pytest.mark.parametrize("name,arm", [
    ("two-cliques-crossed", "omega=4,|Q|=4,both sides"),
    ("two-cliques-tail", "omega>=5,|Q|=omega"),
    ("cliques(5,2)", "omega>=5,|Q|=2"),
    ("cliques(5,3)", "omega>=5,3<=|Q|<=omega-1"),
    ("clique-plus-pendant(5)", "omega>=5,|Q|<=1"),
])
def test_named_arms(name, arm):
    g = named_graph(name)
    c = color(g, "diamond", strict=True)
    assert c.arm == arm and verify_coloring(g, c) is None and c.colors_used <= c.bound


@settings(max_examples=80)
@given(graphs(max_n=9))
def test_total_behaviour_on_arbitrary_graphs(g):
    """Members get a proper colouring within the bound; non-members either do too or raise a certified violation."""
    for cls in CLASSES:
        member = is_in_class(g, CLASS_FORBIDDEN[cls]).member
        try:
            c = color(g, cls)
        except StructureViolation as exc:
            assert not member, f"{cls}: member rejected: {exc}"
            if exc.certificate is not None:
                assert exc.certificate.is_valid(g)
                assert exc.certificate.pattern in CLASS_FORBIDDEN[cls]
            continue
        assert verify_coloring(g, c) is None
        assert c.is_compact()
        if member:
            assert naive_chi(g) <= c.colors_used <= bound(cls, clique_number(g))


@given(graphs(max_n=9))
def test_deterministic(g):
    for cls in CLASSES:
        try:
            assert color(g, cls) == color(g, cls)
        except StructureViolation:
            pass
