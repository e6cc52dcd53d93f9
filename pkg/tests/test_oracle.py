import random

import networkx as nx
import pytest
from hypothesis import given

from oracles import graphs, naive_chi, to_nx
from p2p4color.coloring import Coloring, compact, verify_coloring
from p2p4color.gen import gnp, named_graph
from p2p4color.graph import complete, cycle, empty, from_edge_list, mycielskian
from p2p4color.oracle import OracleRefused, chromatic_number, subset_tables


@pytest.mark.parametrize("g,chi", [(cycle(5), 3), (cycle(7), 3), (mycielskian(cycle(5)), 4),
                                   (complete(6), 6), (empty(4), 1), (from_edge_list(0, []), 0)])
def test_known_values(g, chi):
    r = chromatic_number(g)
    assert r.chi == chi and verify_coloring(g, r.witness) is None


def test_random_g12_matches_k_sweep():
    rng = random.Random(5)
    for _ in range(8):
        g = gnp(12, 0.5, rng)
        assert chromatic_number(g).chi == naive_chi(g)


def test_size_guard():
    with pytest.raises(OracleRefused):
        chromatic_number(complete(21))
    with pytest.raises(OracleRefused):
        subset_tables(complete(17))


def test_frozen_values(frozen):
    for name, rec in frozen.items():
        assert chromatic_number(named_graph(name)).chi == rec["chi"], name


def test_verify_coloring_examples():
    k2 = complete(2)
    assert verify_coloring(k2, [0, 0]) == (0, 1)
    assert verify_coloring(k2, [0, 1]) is None
    with pytest.raises(ValueError):
        verify_coloring(k2, [0, None])


def test_compact_keeps_label_order():
    assert compact([7, 3, 7, 9]) == (1, 0, 1, 2)
    c = Coloring(compact([5, 2, 5]), bound=3, class_tag="x")
    assert c.colors_used == 2 and c.is_compact() and c.classes() == [[1], [0, 2]]


@given(graphs(max_n=9))
def test_bnb_equals_k_sweep(g):
    r = chromatic_number(g)
    assert r.chi == naive_chi(g)
    assert verify_coloring(g, r.witness) is None and r.witness.colors_used == r.chi


@given(graphs(max_n=9))
def test_bipartite_cross_check(g):
    assert (chromatic_number(g).chi <= 2) == nx.is_bipartite(to_nx(g))


@given(graphs(max_n=8))
def test_subset_tables_full_set(g):
    chi, omega = subset_tables(g)
    assert chi[g.all_mask] == naive_chi(g)
