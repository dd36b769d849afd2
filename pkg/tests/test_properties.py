"""Property tests over randomly generated Brauer graphs and strings."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from brauer_ar import HalfEdge, StringEngine, StringWord, classify_edges, parse_graph
from brauer_ar import ar
from brauer_ar.classify import DOMESTIC_1, FINITE, classify, inside_outside_split
from brauer_ar.oracle import OracleAlgebra, enumerate_strings
from brauer_ar.quiver import RelationKind, build_quiver
from brauer_ar.walks import (Flavor, census_orbit_lengths, syzygy_half_edge, walk_census)

from strategies import brauer_graphs, graph_and_string, random_string


def key(sw):
    if sw.is_zero:
        return ("0", sw.edge, sw.orient)
    return tuple((l.arrow, l.inverse) for l in sw.letters)


# -- graphs -----------------------------------------------------------------

@given(brauer_graphs())
def test_valency_sum(g):
    assert sum(g.valency(v) for v in g.vertices) == 2 * len(g.edges)
    assert len(g.half_edges()) == 2 * len(g.edges)


@given(brauer_graphs())
def test_successor_predecessor_are_inverse(g):
    for h in g.half_edges():
        assert g.predecessor(g.successor(h)) == h
        assert g.vertex_of(g.successor(h)) == g.vertex_of(h)


@given(brauer_graphs())
def test_text_roundtrip(g):
    assert parse_graph(g.to_text()) == g


@given(brauer_graphs(), st.randoms(use_true_random=False))
def test_edge_classes_ignore_file_order(g, rnd):
    lines = g.to_text().splitlines()
    slots = [i for i, ln in enumerate(lines) if ln.startswith("edge")]
    edges = [lines[i] for i in slots]
    rnd.shuffle(edges)
    for i, ln in zip(slots, edges):
        lines[i] = ln
    h = parse_graph("\n".join(lines))
    a, b = classify_edges(g), classify_edges(h)
    assert set(a.exceptional) == set(b.exceptional)
    assert a.tree_case == b.tree_case
    assert classify_edges(g) == a


def _connected(vertices, edges, g):
    if not vertices:
        return True
    adj = {v: set() for v in vertices}
    for x in edges:
        u, v = g.edges[x]
        if u not in adj or v not in adj:
            return False
        adj[u].add(v)
        adj[v].add(u)
    start = next(iter(vertices))
    seen = {start}
    todo = [start]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == set(vertices)


@given(brauer_graphs(max_edges=6))
def test_exceptional_subtrees_satisfy_the_definition(g):
    ec = classify_edges(g)
    if ec.tree_case:
        return
    union = set()
    cyc_vertices = set(g.cycle_vertices())
    for t in ec.subtrees:
        edges = set(t.edges)
        union |= edges
        verts = {v for x in edges for v in g.edges[x]}
        # (i) a tree
        assert len(verts) == len(edges) + 1 and _connected(verts, edges, g)
        v = t.connecting_vertex
        assert v in verts
        rest_e = set(g.edges) - edges
        # (ii) v is the unique vertex reconnecting the rest of the graph
        for w in verts:
            ok = _connected((set(g.vertices) - verts) | {w}, rest_e, g)
            assert ok == (w == v)
        for w in verts - {v}:
            assert w not in cyc_vertices          # (iii)
            assert g.multiplicity[w] == 1         # (iv)
    assert union == set(ec.exceptional)


# -- quiver -----------------------------------------------------------------

@given(brauer_graphs())
def test_each_arrow_in_one_cycle(g):
    q = build_quiver(g)
    seen = [a for cyc in q.cycles.values() for a in cyc]
    assert sorted(seen) == sorted(a.id for a in q.arrows)


@given(brauer_graphs())
def test_composable_pairs_are_consecutive_or_forbidden(g):
    q = build_quiver(g)
    forbidden = {r.paths[0] for r in q.relations if r.kind is RelationKind.FORBIDDEN_PAIR}
    for a in q.arrows:
        for b in q.arrows:
            if a.target_edge != b.source_edge:
                continue
            cyc = q.cycles[a.vertex]
            follows = a.vertex == b.vertex and cyc[(cyc.index(a.id) + 1) % len(cyc)] == b.id
            assert follows != ((a.id, b.id) in forbidden)


@given(brauer_graphs(max_edges=4))
def test_half_edge_start_end(g):
    eng = StringEngine(g)
    letters = [(a.id, i) for a in eng.quiver.arrows for i in (False, True)]
    for l1 in letters:
        for l2 in letters:
            w = StringWord.of(l1, l2)
            if not eng.is_valid_string(w):
                continue
            same = eng.e_half(w.letters[0]) == eng.s_half(w.letters[1])
            assert same == (l1[1] == l2[1])


# -- strings ----------------------------------------------------------------

@given(graph_and_string())
def test_canonical_form(gw):
    g, w = gw
    eng = StringEngine(g)
    c = eng.canonical_form(w)
    assert c == eng.canonical_form(w.inverse())
    assert eng.canonical_form(c) == c


@given(graph_and_string())
def test_peak_and_deep_agree_with_brute_force(gw):
    g, w = gw
    eng = StringEngine(g)
    alg = OracleAlgebra(g)
    for u in (w, w.inverse()) if not w.is_zero else [StringWord.zero(w.edge, HalfEdge(w.edge, s)) for s in (0, 1)]:
        k = key(u)
        assert eng.ends_on_peak(u) == alg.ends_on_peak(k) == (eng.inverse_extension(u) is None)
        assert eng.ends_in_deep(u) == alg.ends_in_deep(k) == (eng.direct_extension(u) is None)


@given(graph_and_string())
def test_surgery_round_trips(gw):
    g, w = gw
    eng = StringEngine(g)
    us = [w, w.inverse()] if not w.is_zero else [StringWord.zero(w.edge, HalfEdge(w.edge, s)) for s in (0, 1)]
    for u in us:
        if not eng.ends_on_peak(u):
            assert eng.delete_hook_end(eng.add_hook_end(u)) == u
        if not eng.ends_in_deep(u):
            assert eng.delete_cohook_end(eng.add_cohook_end(u)) == u
        if not eng.starts_on_peak(u):
            assert eng.delete_hook_start(eng.add_hook_start(u)) == u
        if not eng.starts_in_deep(u):
            assert eng.delete_cohook_start(eng.add_cohook_start(u)) == u


@given(graph_and_string())
def test_surgery_matches_oracle(gw):
    g, w = gw
    eng = StringEngine(g)
    alg = OracleAlgebra(g)
    u = eng.oriented(w)
    for mine, theirs in ((eng.end_plus, alg.end_plus), (eng.end_minus, alg.end_minus),
                         (eng.start_plus, alg.start_plus), (eng.start_minus, alg.start_minus)):
        a, b = mine(u), theirs(key(u))
        assert (a is None) == (b is None)
        if a is not None:
            assert alg.canon(key(eng.canonical_form(a))) == alg.canon(b)


@given(brauer_graphs())
def test_maximal_strings_end_in_deep(g):
    eng = StringEngine(g)
    for h in g.half_edges():
        if not eng._live(h):
            continue
        w = eng.maximal_direct(h)
        assert eng.ends_in_deep(w) and eng.starts_in_deep(w.inverse())
        assert eng.is_valid_string(w)


@given(brauer_graphs())
def test_mouth_strings_are_direct_and_maximal(g):
    eng = StringEngine(g)
    q = eng.quiver
    for m in eng.mouth_strings():
        w = m.word
        if w.is_zero:
            continue
        assert not any(l.inverse for l in w.letters)
        for a in q.arrows:
            assert not eng.is_valid_string(StringWord(w.letters + (StringWord.of(a.id).letters[0],)))
            assert not eng.is_valid_string(StringWord(StringWord.of(a.id).letters + w.letters))


# -- walks ------------------------------------------------------------------

@given(brauer_graphs(max_edges=6))
def test_walk_conservation(g):
    for f in (Flavor.ANTICLOCKWISE, Flavor.CLOCKWISE, Flavor.DOUBLE, Flavor.DOUBLE_CLOCKWISE):
        c = walk_census(g, f)
        assert sum(c.lengths) == 2 * len(g.edges)
        assert sorted(h for w in c.walks for h in w.steps) == sorted(g.half_edges())
    assert walk_census(g).lengths == walk_census(g, Flavor.CLOCKWISE).lengths


@given(brauer_graphs(max_edges=6))
def test_non_exceptional_walks_avoid_exceptional_edges(g):
    ec = classify_edges(g)
    if ec.tree_case:
        return
    for f in (Flavor.NONEXC_ANTICLOCKWISE, Flavor.NONEXC_CLOCKWISE):
        c = walk_census(g, f)
        steps = [h for w in c.walks for h in w.steps]
        assert not any(ec.is_exceptional(h.edge) for h in steps)
        assert len(steps) == 2 * len(ec.non_exceptional)


@given(brauer_graphs(max_edges=4, max_mult=2))
@settings(max_examples=40)
def test_translate_is_double_syzygy_on_mouths(g):
    eng = StringEngine(g)
    lengths = census_orbit_lengths(g)
    for h in g.half_edges():
        m = eng.mouth_string(h)
        h2 = syzygy_half_edge(g, syzygy_half_edge(g, h))
        assert eng.same_module(eng.tau(m), eng.mouth_string(h2))
        assert ar.tau_period(eng, m, 2 * len(g.edges)) == lengths[h.bar()]


# -- AR fragments -----------------------------------------------------------

@given(graph_and_string(max_len=6))
@settings(max_examples=40)
def test_fragment_mesh_and_mouths(gw):
    g, w = gw
    eng = StringEngine(g)
    frag = ar.explore(eng, w, radius=3)
    assert frag.mesh_failures == []
    mouths = {eng.canonical_form(m.word) for m in eng.mouth_strings()}
    for u in frag.nodes:
        assert ar.is_mouth(eng, u) == (u in mouths)


# -- classification ---------------------------------------------------------

@given(brauer_graphs(max_edges=6, max_mult=1))
def test_unique_cycle_census(g):
    cyc = g.unique_cycle()
    if cyc is None:
        return
    rep = classify(g)
    l = len(cyc)
    walks = walk_census(g).lengths
    n1, n2 = inside_outside_split(g)
    assert len(walks) == 2
    if l % 2:
        assert rep.rep_type == DOMESTIC_1
        assert all(n % 2 for n in walks)
        assert sorted(rep.tube_census) == sorted((l + 2 * n1, l + 2 * n2))
        assert rep.euclidean.p + rep.euclidean.q == 2 * len(g.edges)
    else:
        p, q = l // 2 + n1, l // 2 + n2
        assert sorted(rep.tube_census) == sorted((p, p, q, q))
        assert rep.euclidean.p + rep.euclidean.q == len(g.edges)


@given(st.integers(1, 6), st.integers(0, 2 ** 16))
def test_trees_with_two_doubled_vertices(n, seed):
    rnd = random.Random(seed)
    lines = [f"vertex v0 1"]
    for i in range(1, n + 1):
        lines.append(f"vertex v{i} 1")
    parents = {i: rnd.randrange(i) for i in range(1, n + 1)}
    lines += [f"edge x{i} v{parents[i]} v{i}" for i in range(1, n + 1)]
    a, b = rnd.sample(range(n + 1), 2)
    lines = [ln.replace(f"vertex v{a} 1", f"vertex v{a} 2").replace(f"vertex v{b} 1", f"vertex v{b} 2")
             if ln.startswith("vertex") and ln.split()[1] in (f"v{a}", f"v{b}") else ln for ln in lines]
    # vertices of valency > 2 need an order; any order is a valid ribbon structure
    incident = {}
    for i in range(1, n + 1):
        for v in (f"v{parents[i]}", f"v{i}"):
            incident.setdefault(v, []).append(f"x{i}")
    lines += [f"order {v}: {' '.join(xs)}" for v, xs in incident.items()]
    g = parse_graph("\n".join(lines))
    r = classify(g)
    assert r.rep_type == DOMESTIC_1
    assert r.euclidean.p == r.euclidean.q == n


@given(brauer_graphs(max_edges=3, max_mult=2))
@settings(max_examples=30)
def test_finite_type_means_finitely_many_strings(g):
    finite = classify(g).rep_type == FINITE
    assert finite == g.is_brauer_tree()
    alg = OracleAlgebra(g)
    if finite:
        bound = 2 * sum(g.multiplicity[v] * g.valency(v) for v in g.vertices)
        assert len(enumerate_strings(g, bound, alg)) == len(enumerate_strings(g, bound + 1, alg))
    else:
        assert len(enumerate_strings(g, 6, alg)) < len(enumerate_strings(g, 7, alg))


# -- oracle internals -------------------------------------------------------

@given(brauer_graphs(max_edges=4), st.integers(0, 2 ** 32 - 1))
def test_fast_append_matches_definition(g, seed):
    alg = OracleAlgebra(g)
    rnd = random.Random(seed)
    for _ in range(20):
        w = key(random_string(alg, rnd, 10))
        if w[0] == "0":
            continue
        for l in alg.letters_from[alg.end_edge(w)]:
            assert alg.append_ok(w, l) == alg.valid(w + (l,))
