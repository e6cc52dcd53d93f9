import pytest
from hypothesis import given, strategies as st

from oracles import graphs, is_p4_free
from p2p4color.clique import clique_number
from p2p4color.cograph import Join, Leaf, NotCograph, Union, color_cograph, cotree, evaluate, is_well_formed, leaves
from p2p4color.coloring import verify_coloring
from p2p4color.detect import P4
from p2p4color.gen import random_cograph, random_cotree
from p2p4color.graph import complete, disjoint_union, empty, join, path
from p2p4color.oracle import chromatic_number


def test_small_cotrees():
    assert cotree(complete(1)) == Leaf(0)
    t = cotree(complete(3))
    assert isinstance(t, Join) and sorted(leaves(t)) == [0, 1, 2]


def test_p4_rejected_with_witness():
    with pytest.raises(NotCograph) as info:
        cotree(path(4))
    assert info.value.witness.pattern == P4 and info.value.witness.is_valid(path(4))


@pytest.mark.parametrize("g,k", [(complete(4), 4), (disjoint_union(complete(3), complete(2)), 3),
                                 (join(empty(2), empty(2), empty(2)), 3)])
def test_color_counts(g, k):
    c = color_cograph(g)
    assert c.colors_used == k == chromatic_number(g).chi
    assert verify_coloring(g, c) is None


def test_color_rejects_non_cograph():
    with pytest.raises(NotCograph):
        color_cograph(path(5))


@given(st.integers(1, 40), st.integers(0, 10**6))
def test_random_cotree_roundtrip(n, seed):
    t = random_cotree(n, seed)
    assert is_well_formed(t) and sorted(leaves(t)) == list(range(n))
    g = evaluate(t, n)
    assert evaluate(cotree(g), n) == g
    c = color_cograph(g)
    assert verify_coloring(g, c) is None and c.colors_used == clique_number(g)


@given(graphs(max_n=8))
def test_recognition_matches_p4_oracle(g):
    try:
        cotree(g)
        recognised = True
    except NotCograph as exc:
        assert exc.witness.is_valid(g)
        recognised = False
    assert recognised == is_p4_free(g)


def test_union_node_shape():
    t = cotree(disjoint_union(complete(2), complete(1)))
    assert isinstance(t, Union) and len(t.children) == 2


def test_random_cograph_is_deterministic():
    assert random_cograph(15, 4) == random_cograph(15, 4)
