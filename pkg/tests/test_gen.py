import random

import pytest
from hypothesis import given, strategies as st

from p2p4color.clique import clique_number
from p2p4color.detect import DIAMOND, P2_P4, is_in_class
from p2p4color.gen import (CLASS_FORBIDDEN, CorpusConfig, GenSpec, SamplingExhausted, clique_plus_pendant, corpus,
                           gnp, named_graph, random_in_class, random_in_class_with_tries, random_planted_in_class)
from p2p4color.graph import complete, empty


def test_p_zero_gives_empty_graph_first_try():
    for forbidden in CLASS_FORBIDDEN.values():
        assert random_in_class_with_tries(GenSpec(6, 0.0, forbidden, seed=3)) == (empty(6), 1)


def test_p_one_gives_clique_first_try():
    assert random_in_class_with_tries(GenSpec(6, 1.0, (DIAMOND,), seed=3)) == (complete(6), 1)


def test_sampled_member_is_in_class():
    g = random_in_class(GenSpec(12, 0.3, (P2_P4, DIAMOND), seed=1, max_tries=100000))
    assert g.n == 12 and is_in_class(g, (P2_P4, DIAMOND)).member


def test_gnp_draw_order():
    # one draw per pair, pairs in lexicographic order
    rng, ref = random.Random(8), random.Random(8)
    g = gnp(5, 0.5, rng)
    expected = [(u, v) for u in range(5) for v in range(u + 1, 5) if ref.random() < 0.5]
    assert g.edges() == expected


def test_exhaustion_raises():
    with pytest.raises(SamplingExhausted):
        random_in_class(GenSpec(14, 0.5, CLASS_FORBIDDEN["diamond"], seed=0, max_tries=3))


@pytest.mark.parametrize("kwargs", [dict(p=1.5), dict(p=-0.1), dict(max_tries=0), dict(n=-1)])
def test_spec_validation(kwargs):
    args = dict(n=5, p=0.5, forbidden=(), seed=0) | kwargs
    with pytest.raises(ValueError):
        GenSpec(**args)


@given(st.integers(0, 2**32 - 1))
def test_same_seed_same_graph(seed):
    spec = GenSpec(8, 0.2, CLASS_FORBIDDEN["gem"], seed, max_tries=5000)
    assert random_in_class(spec) == random_in_class(spec)


def test_planted_keeps_its_clique():
    g = random_planted_in_class(5, 4, 0.3, 0.2, CLASS_FORBIDDEN["diamond"], seed=2)
    assert g.is_clique(range(5)) and clique_number(g) >= 5


def test_named_graphs(frozen):
    for name, rec in frozen.items():
        g = named_graph(name)
        assert (g.n, g.m) == (rec["n"], rec["m"]), name
    assert named_graph("grotzsch").n == 11
    assert named_graph("Two-K5s") == named_graph("cliques(5,5)")
    with pytest.raises(ValueError):
        named_graph("dodecahedron")


def test_clique_plus_pendant_is_in_perfection_class():
    g = clique_plus_pendant(5)
    assert clique_number(g) == 5 and is_in_class(g, CLASS_FORBIDDEN["perfection"]).member
    assert g.degree(5) == 1


def test_corpus_is_reproducible_and_in_class():
    cfg = CorpusConfig("butterfly", 30, seed=4)
    a, b = corpus(cfg), corpus(cfg)
    assert a == b
    assert all(6 <= g.n <= 14 and is_in_class(g, CLASS_FORBIDDEN["butterfly"]).member for g in a)


def test_corpus_config_validation():
    with pytest.raises(ValueError):
        CorpusConfig("house")
    with pytest.raises(ValueError):
        CorpusConfig("gem", n_min=9, n_max=3)
