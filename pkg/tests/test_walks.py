import pytest

from brauer_ar import HalfEdge, StringEngine
from brauer_ar.walks import (Flavor, WalkError, census_orbit_lengths, green_step, green_walk,
                             syzygy_half_edge, syzygy_step, walk_census)


def test_single_edge_walk_alternates(g1):
    w = green_walk(g1, HalfEdge("x", 0))
    assert w.steps == (HalfEdge("x", 0), HalfEdge("x", 1))
    assert w.period == 2 == 2 * len(g1.edges)


def test_g4_inner_walk_has_period_six(g4):
    h = HalfEdge("c1", 1)      # the inner walk meets the chord i1
    assert green_walk(g4, h).period == 6
    assert walk_census(g4).lengths == [6, 10]
    inner = walk_census(g4).orbit_of(HalfEdge("i1", 0))
    assert {k.edge for k in inner.steps} - {"c1", "c2", "c3", "c4"} == {"i1"}


def test_clockwise_undoes_anticlockwise(graphs):
    for g in graphs.values():
        for h in g.half_edges():
            k = green_step(g, h)
            assert green_step(g, k.bar(), Flavor.CLOCKWISE).bar() == h


def test_tree_walk_visits_every_edge_twice(g2):
    c = walk_census(g2)
    assert c.lengths == [16]
    assert walk_census(g2, Flavor.DOUBLE).lengths == [8, 8]


def test_g4_double_census(g4):
    assert walk_census(g4, Flavor.DOUBLE).lengths == [3, 3, 5, 5]
    assert walk_census(g4, Flavor.DOUBLE_CLOCKWISE).lengths == [3, 3, 5, 5]


def test_g3_census(g3):
    assert walk_census(g3).lengths == [1, 15]
    assert walk_census(g3, Flavor.DOUBLE).lengths == [1, 15]


@pytest.mark.parametrize("flavor", [Flavor.ANTICLOCKWISE, Flavor.CLOCKWISE, Flavor.DOUBLE, Flavor.DOUBLE_CLOCKWISE])
def test_census_partitions_half_edges(graphs, flavor):
    for g in graphs.values():
        c = walk_census(g, flavor)
        steps = [h for w in c.walks for h in w.steps]
        assert sorted(steps) == sorted(g.half_edges())
        assert sum(c.lengths) == 2 * len(g.edges)


def test_double_walk_is_every_second_step(g4):
    for w in walk_census(g4, Flavor.DOUBLE).walks:
        for i, h in enumerate(w.steps):
            assert green_step(g4, green_step(g4, h)) == w.step(i + 1)


def test_non_exceptional_walks(g3, g4):
    assert walk_census(g4, Flavor.NONEXC_ANTICLOCKWISE).lengths == [4, 4]
    assert walk_census(g3, Flavor.NONEXC_ANTICLOCKWISE).lengths == [1, 7]
    for w in walk_census(g3, Flavor.NONEXC_CLOCKWISE).walks:
        assert not {h.edge for h in w.steps} & {"y5", "y6", "y7", "y8"}


def test_non_exceptional_walk_errors(g2, g4):
    with pytest.raises(WalkError):
        walk_census(g2, Flavor.NONEXC_ANTICLOCKWISE)
    with pytest.raises(WalkError):
        green_step(g4, HalfEdge("o2", 0), Flavor.NONEXC_ANTICLOCKWISE)


def test_census_export(g4):
    d = walk_census(g4, Flavor.DOUBLE).to_dict()
    assert d["flavor"] == "double" and d["lengths"] == [3, 3, 5, 5]
    assert sum(len(w["steps"]) for w in d["walks"]) == 16


def test_syzygy_periodicity(graphs):
    for g in graphs.values():
        eng = StringEngine(g)
        for m in eng.mouth_strings():
            n = green_walk(g, m.half_edge.bar()).period
            cur = m
            for _ in range(n):
                cur = syzygy_step(eng, cur)
            assert cur == m


def test_single_edge_syzygy(g1):
    eng = StringEngine(g1)
    h0, h1 = HalfEdge("x", 0), HalfEdge("x", 1)
    assert syzygy_half_edge(g1, h0) == h1 and syzygy_half_edge(g1, h1) == h0
    m = eng.mouth_strings()[0]
    two = syzygy_step(eng, syzygy_step(eng, m))
    assert two == m and two.word.is_zero


def test_translate_orbits_follow_double_census(graphs):
    for g in graphs.values():
        eng = StringEngine(g)
        lengths = census_orbit_lengths(g)
        for h in g.half_edges():
            start = eng.canonical_form(eng.mouth_string(h))
            cur, k = start, 0
            while True:
                cur = eng.canonical_form(eng.tau(cur))
                k += 1
                if cur == start or k > 2 * len(g.edges):
                    break
            assert k == lengths[h.bar()]
            h2 = syzygy_half_edge(g, syzygy_half_edge(g, h))
            assert eng.canonical_form(eng.tau(start)) == eng.canonical_form(eng.mouth_string(h2))
