import random

import pytest
from hypothesis import given

from oracles import graphs
from p2p4color.clique import max_clique
from p2p4color.detect import GEM, is_in_class
from p2p4color.gen import CLASS_FORBIDDEN, corpus, CorpusConfig, gnp, named_graph
from p2p4color.graph import complete, cycle, mycielskian, path
from p2p4color.wagon import NotMaximumClique, check_partition, gem_sets, verify_structure, wagon_partition


def test_clique_partition_is_trivial():
    p = wagon_partition(complete(3), max_clique(complete(3)))
    assert p.A == (0, 1, 2)
    assert not any(p.C.values()) and not any(p.I.values())


def test_random_g12_invariants():
    rng = random.Random(40)
    for _ in range(30):
        g = gnp(12, 0.4, rng)
        check_partition(g, wagon_partition(g, max_clique(g)))


def test_two_k5s():
    g = named_graph("two-k5s")
    p = wagon_partition(g, max_clique(g))
    assert p.c(1, 2) == frozenset(range(5, 10))
    assert verify_structure(g, p, "diamond").ok


def test_grotzsch_facts():
    g = mycielskian(cycle(5))
    p = wagon_partition(g, max_clique(g))
    report = verify_structure(g, p, "diamond")
    assert report.ok
    claims = {f.claim for f in report.facts}
    assert {"I[1] is stable", "I[2] is stable"} <= claims


def test_gem_itself_violates_a_fact():
    # With the universal vertex as v_1 the other four vertices form M, which is the P4.
    g = GEM.graph
    report = verify_structure(g, wagon_partition(g, (4, 0, 1)), "gem")
    assert [f.claim for f in report.violations()] == ["G[M] is P4-free"]
    cert = report.violations()[0].certificate
    assert cert.pattern.name == "gem" and cert.is_valid(g)


def test_gem_under_default_anchor_breaks_no_fact():
    g = GEM.graph
    assert verify_structure(g, wagon_partition(g, max_clique(g)), "gem").ok


def test_non_maximum_anchor_rejected():
    g = complete(4)
    with pytest.raises(NotMaximumClique) as info:
        wagon_partition(g, (0, 1, 2))
    assert info.value.certificate.vertices == frozenset(range(4))


def test_anchor_must_be_clique():
    with pytest.raises(ValueError):
        wagon_partition(path(3), (0, 2))


def test_part_lookup_and_summary():
    g = named_graph("two-cliques-crossed")
    p = wagon_partition(g, max_clique(g))
    assert p.part_of(0) == "A[1]" and p.part_of(8) == "C[1,3]" and p.part_of(9) == "C[2,3]"
    assert p.summary()["C"]["1,2"] == [4, 5, 6, 7]


@given(graphs(max_n=12))
def test_partition_invariants(g):
    check_partition(g, wagon_partition(g, max_clique(g)))


@pytest.mark.parametrize("cls", ["gem", "butterfly", "diamond"])
def test_structure_holds_on_corpus(cls):
    for g in corpus(CorpusConfig(cls, 60, seed=11)):
        p = wagon_partition(g, max_clique(g))
        report = verify_structure(g, p, cls)
        assert report.ok, report.to_dict()


@given(graphs(max_n=10))
def test_gem_sets_cover(g):
    if g.n == 0:
        return
    p = wagon_partition(g, max_clique(g))
    m, n = gem_sets(p)
    assert not m & n
    assert m | n | p.c(1, 2) | {p.v(1)} == set(range(g.n))
    assert all(g.has_edge(p.v(1), x) for x in m)


@given(graphs(max_n=10))
def test_members_never_violate(g):
    for cls, forbidden in CLASS_FORBIDDEN.items():
        if cls == "perfection" or not is_in_class(g, forbidden).member:
            continue
        assert verify_structure(g, wagon_partition(g, max_clique(g)), cls).ok
