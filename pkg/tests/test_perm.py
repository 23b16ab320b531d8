import itertools
import random

import pytest
from hypothesis import given, settings

import circpart as cp
from conftest import graphs, naive_respects


def test_compose_identities():
    p = (0, 2, 1, 4, 3)
    assert cp.compose(cp.identity(5), p) == p
    assert cp.compose(p, cp.inverse(p)) == cp.identity(5)
    assert cp.compose(cp.inverse(p), p) == cp.identity(5)


def test_compose_applies_right_factor_first():
    p = (1, 2, 0)
    q = (0, 2, 1)
    assert cp.compose(p, q) == tuple(p[q[v]] for v in range(3))


def test_compose_of_multipliers_multiplies():
    m2 = cp.multiplier_perm(5, 2)
    m3 = cp.multiplier_perm(5, 3)
    assert cp.compose(m2, m3) == cp.identity(5)  # 2*3 = 6 = 1 mod 5
    assert cp.compose(m2, m2) == cp.multiplier_perm(5, 4)


def test_compose_rejects_degree_mismatch():
    with pytest.raises(ValueError):
        cp.compose((0, 1), (0, 1, 2))


def test_multiplier_perm_values():
    assert cp.multiplier_perm(8, 1) == cp.identity(8)
    assert cp.multiplier_perm(8, 7) == (0, 7, 6, 5, 4, 3, 2, 1)
    assert cp.multiplier_perm(5, 2) == (0, 2, 4, 1, 3)


def test_multiplier_perm_rejects_non_units():
    with pytest.raises(ValueError):
        cp.multiplier_perm(8, 2)
    with pytest.raises(ValueError):
        cp.multiplier_perm(6, 3)


def test_is_automorphism_examples():
    g = cp.from_instance("8:1,2:d")
    rotation = tuple((v + 1) % 8 for v in range(8))
    assert cp.is_automorphism(g, rotation)
    negate = tuple((7 * v) % 8 for v in range(8))
    assert not cp.is_automorphism(g, negate)  # arc (0,1) would map to (0,7)
    g5 = cp.build(5, (1, 4), cp.UNDIRECTED)
    assert cp.is_automorphism(g5, cp.multiplier_perm(5, 4))
    with pytest.raises(ValueError):
        cp.is_automorphism(g5, (0, 1, 2))


def test_respects_examples():
    g = cp.from_instance("8:1,2:d")
    c = cp.partition_by_cycle(g)
    assert cp.respects(cp.identity(8), c)
    assert cp.respects(cp.identity(8), cp.partition_by_generator(g))

    g8 = cp.build(8, (1, 2, 6, 7), cp.UNDIRECTED)
    assert cp.respects(cp.multiplier_perm(8, 7), cp.partition_by_cycle(g8))

    g6 = cp.build(6, (2, 4), cp.UNDIRECTED)
    c6 = cp.partition_by_cycle(g6)
    odd_cycle = (0, 3, 2, 5, 4, 1)  # fixes 0,2,4 and rotates 1 -> 3 -> 5
    assert cp.is_automorphism(g6, odd_cycle)
    assert cp.respects(odd_cycle, c6)


def test_respects_rejects_non_automorphisms():
    g = cp.from_instance("8:1,2:d")
    c = cp.partition_by_cycle(g)
    negate = tuple((7 * v) % 8 for v in range(8))
    with pytest.raises(ValueError):
        cp.respects(negate, c)
    with pytest.raises(ValueError):
        cp.respects((0, 1, 2), c)


def test_respects_depends_only_on_part_arc_sets():
    g = cp.build(6, (2, 4), cp.UNDIRECTED)
    c = cp.partition_by_cycle(g)
    relabeled = cp.ArcPartition(
        "C",
        c.n,
        c.directed,
        tuple(cp.Part(p.arcs, (99,), coset_rep=None) for p in reversed(c.parts)),
    )
    rng = random.Random(7)
    for _ in range(20):
        rest = rng.sample(range(1, 6), 5)
        p = (0,) + tuple(rest)
        if not cp.is_automorphism(g, p):
            continue
        assert cp.respects(p, c) == cp.respects(p, relabeled)


@given(graphs(max_n=14))
@settings(max_examples=150)
def test_multipliers_respect_both_partitions(graph):
    n = graph.n
    b = cp.partition_by_generator(graph)
    c = cp.partition_by_cycle(graph)
    for j in cp.multipliers(n, graph.elements):
        p = cp.multiplier_perm(n, j)
        assert p[0] == 0
        assert cp.is_automorphism(graph, p)
        assert cp.respects(p, b)
        assert cp.respects(p, c)
        assert naive_respects(graph, b, p)
        assert naive_respects(graph, c, p)


@pytest.mark.parametrize("text, kind", [("6:2,4:u", "C"), ("8:1,2:d", "B"), ("4:1,2,3:u", "C")])
def test_respecting_automorphisms_form_a_group(text, kind):
    graph = cp.from_instance(text)
    partition = cp.arc_partition(graph, kind)
    sols = cp.enumerate_respecting(graph, partition)
    members = set(sols)
    assert cp.identity(graph.n) in members
    for p in sols:
        assert cp.inverse(p) in members
        for q in sols:
            assert cp.compose(p, q) in members


def test_format_and_parse_perm():
    p = (0, 3, 2, 5, 4, 1)
    assert cp.format_perm(p) == "[0, 3, 2, 5, 4, 1]"
    assert cp.parse_perm("[0, 3, 2, 5, 4, 1]") == p
    assert cp.parse_perm("0,3,2,5,4,1") == p
    with pytest.raises(ValueError):
        cp.parse_perm("[0, 0, 1]")
    with pytest.raises(ValueError):
        cp.parse_perm("[a, b]")


@given(graphs(max_n=10))
@settings(max_examples=60)
def test_identity_respects_everything(graph):
    ident = cp.identity(graph.n)
    assert cp.respects(ident, cp.partition_by_generator(graph))
    assert cp.respects(ident, cp.partition_by_cycle(graph))
