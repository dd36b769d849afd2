"""Brute-force ground truth for the string combinatorics.

Nothing here uses the half-edge run rule of the string engine or any Green
walk. Validity is read off the relation set: a word is a string when its
letters compose, it never backtracks, and no run of arrows (or of formal
inverses, read backwards) contains a zero relation, a forbidden pair or a
full cycle power. Extensions are found by trying every letter, hooks and
cohooks by greedy maximal extension, and their deletions by searching for
the shorter word whose hook or cohook gives back the input. The results are
then compared with the walk-based predictions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import BrauerGraph, HalfEdge, classify_edges
from .quiver import RelationKind, build_quiver

# words are tuples of (arrow id, inverse flag); the zero string at x with
# orientation sigma is ("0", x, sigma) and sigma may be None
Word = tuple


def is_zero(w: Word) -> bool:
    return len(w) == 3 and w[0] == "0"


class OracleAlgebra:
    def __init__(self, g: BrauerGraph):
        self.graph = g
        q = self.quiver = build_quiver(g)
        self.src = {a.id: a.source_edge for a in q.arrows}
        self.tgt = {a.id: a.target_edge for a in q.arrows}
        self.shalf = {a.id: a.source_half for a in q.arrows}
        self.thalf = {a.id: a.target_half for a in q.arrows}
        self.index = {a.id: i for i, a in enumerate(q.arrows)}
        zero = set()
        for r in q.relations:
            if r.kind in (RelationKind.FORBIDDEN_PAIR, RelationKind.CYCLE_POWER):
                zero.add(r.paths[0])
        # full cycle powers are not strings (stable category)
        for v, cyc in q.cycles.items():
            e = q.multiplicity[v]
            for i in range(len(cyc)):
                zero.add(tuple(cyc[i:] + cyc[:i]) * e)
        self.zero_paths = zero
        self.max_zero = max(len(p) for p in zero)
        self.letters_from: dict[str, list] = {x: [] for x in g.edges}
        for a in q.arrows:
            self.letters_from[a.source_edge].append((a.id, False))
            self.letters_from[a.target_edge].append((a.id, True))
        self._tables()

    # -- basic word data ----------------------------------------------

    def s(self, l) -> str:
        return self.tgt[l[0]] if l[1] else self.src[l[0]]

    def e(self, l) -> str:
        return self.src[l[0]] if l[1] else self.tgt[l[0]]

    def end_edge(self, w: Word) -> str:
        return w[1] if is_zero(w) else self.e(w[-1])

    def inverse(self, w: Word) -> Word:
        if is_zero(w):
            return ("0", w[1], w[2].bar() if w[2] else None)
        return tuple((a, not i) for a, i in reversed(w))

    def valid(self, w: Word) -> bool:
        if is_zero(w):
            return True
        for i, l in enumerate(w):
            if i and not self._junction_ok(w[i - 1], l):
                return False
        for i in range(len(w)):
            if not self._tail_ok(w[: i + 1]):
                return False
        return True

    def _junction_ok(self, a, b) -> bool:
        if self.e(a) != self.s(b):
            return False
        return not (a[0] == b[0] and a[1] != b[1])

    def _tail_ok(self, w: Word) -> bool:
        """No relation inside the final same-sign run that uses its last letter."""
        sign = w[-1][1]
        run = []
        for l in reversed(w):
            if l[1] != sign or len(run) >= self.max_zero:
                break
            run.append(l[0])
        # run is read backwards; a direct run reads forwards as a path
        path = tuple(reversed(run)) if not sign else tuple(run)
        n = len(path)
        for k in range(1, n + 1):
            sub = path[n - k:] if not sign else path[:k]
            if sub in self.zero_paths:
                return False
        return True

    def _tables(self) -> None:
        """Tabulate _tail_ok so that appending a letter costs O(run length).

        A same-sign run with no forbidden pair inside follows a unique chain
        of letters, so whether a run of n letters ending in l survives depends
        only on (l, n). ``limit[l]`` is the least failing n.
        """
        letters = [l for ls in self.letters_from.values() for l in ls]
        self.follow = {}
        self.pair_ok = {}
        self.chain_pred = {}
        for l in letters:
            for sign in (False, True):
                self.follow[l, sign] = [m for m in self.letters_from[self.e(l)]
                                        if m[1] == sign and self._junction_ok(l, m)]
            for m in self.follow[l, l[1]]:
                if self._tail_ok((l, m)):
                    self.pair_ok[l, m] = True
                    if m in self.chain_pred:
                        raise AssertionError(f"two predecessors of {m} within a run")
                    self.chain_pred[m] = l
        self.limit = {}
        for l in letters:
            run = (l,)
            n = None
            for k in range(1, self.max_zero + 2):
                if not self._tail_ok(run):
                    n = k
                    break
                p = self.chain_pred.get(run[0])
                if p is None:
                    break
                run = (p,) + run
            self.limit[l] = n if n is not None else 10 ** 9

    def append_ok(self, w: Word, l) -> bool:
        """Whether w·l is a string, for a non-zero string w."""
        last = w[-1]
        if self.e(last) != self.s(l) or (last[0] == l[0] and last[1] != l[1]):
            return False
        if last[1] != l[1]:
            return self.limit[l] > 1
        if (last, l) not in self.pair_ok:
            return False
        lim = self.limit[l]
        k = 1
        i = len(w) - 2
        while i >= 0 and w[i][1] == l[1] and k + 1 < lim:
            k += 1
            i -= 1
        return k + 1 < lim

    def extensions(self, w: Word, inverse: bool) -> list:
        """All letters of the given sign that can be appended to w."""
        if is_zero(w):
            sigma = w[2]
            out = []
            for l in self.letters_from[w[1]]:
                if l[1] != inverse:
                    continue
                if sigma is not None:
                    # formal inverses leave from sigma, arrows from its partner
                    if inverse and self.thalf[l[0]] != sigma:
                        continue
                    if not inverse and self.shalf[l[0]] != sigma.bar():
                        continue
                if self.valid((l,)):
                    out.append(l)
            return out
        return [l for l in self.follow[w[-1], inverse] if self.append_ok(w, l)]

    # -- peaks, hooks, cohooks ----------------------------------------

    def ends_on_peak(self, w: Word) -> bool:
        return not self.extensions(w, True)

    def ends_in_deep(self, w: Word) -> bool:
        return not self.extensions(w, False)

    def _greedy(self, w: Word, inverse: bool) -> Word:
        while True:
            ext = self.extensions(w, inverse)
            if not ext:
                return w
            if len(ext) > 1:
                raise AssertionError(f"two continuations of one sign after {w}")
            w = w + (ext[0],)

    def hook(self, w: Word) -> Word | None:
        ext = self.extensions(w, True)
        if len(ext) != 1:
            return None
        return self._greedy(self._start(w) + (ext[0],), False)

    def cohook(self, w: Word) -> Word | None:
        ext = self.extensions(w, False)
        if len(ext) != 1:
            return None
        return self._greedy(self._start(w) + (ext[0],), True)

    @staticmethod
    def _start(w: Word) -> Word:
        return () if is_zero(w) else w

    def _shorter(self, w: Word, first_inverse: bool, builder) -> Word | None:
        """The word u with builder(u) == w, where w = u·l·(tail of the other sign)."""
        for k in range(len(w) - 1, -1, -1):
            if w[k][1] != first_inverse:
                continue
            if any(l[1] == first_inverse for l in w[k + 1:]):
                continue
            if k:
                u = w[:k]
                if builder(u) == w:
                    return u
            else:
                x = self.s(w[0])
                for side in (0, 1):
                    u = ("0", x, HalfEdge(x, side))
                    if builder(u) == w:
                        return u
        return None

    def delete_hook(self, w: Word) -> Word | None:
        if is_zero(w):
            return None
        return self._shorter(w, True, self.hook)

    def delete_cohook(self, w: Word) -> Word | None:
        if is_zero(w):
            return None
        return self._shorter(w, False, self.cohook)

    # -- neighbours -----------------------------------------------------

    def orient(self, w: Word) -> Word:
        if is_zero(w) and w[2] is None:
            return ("0", w[1], HalfEdge(w[1], 0))
        return w

    def end_plus(self, w: Word) -> Word | None:
        w = self.orient(w)
        return self.delete_cohook(w) if self.ends_on_peak(w) else self.hook(w)

    def end_minus(self, w: Word) -> Word | None:
        w = self.orient(w)
        return self.delete_hook(w) if self.ends_in_deep(w) else self.cohook(w)

    def start_plus(self, w: Word) -> Word | None:
        r = self.end_plus(self.inverse(self.orient(w)))
        return None if r is None else self.inverse(r)

    def start_minus(self, w: Word) -> Word | None:
        r = self.end_minus(self.inverse(self.orient(w)))
        return None if r is None else self.inverse(r)

    def tau(self, w: Word) -> Word | None:
        a = self.start_minus(w)
        if a is not None and (r := self.end_minus(a)) is not None:
            return r
        b = self.end_minus(w)
        if b is not None and (r := self.start_minus(b)) is not None:
            return r
        if a is None and b is None and self.end_plus(w) is None and self.start_plus(w) is None:
            return w
        return None

    # -- identity -------------------------------------------------------

    def canon(self, w: Word) -> Word:
        if is_zero(w):
            return ("0", w[1], None)
        inv = self.inverse(w)
        key = lambda u: tuple((self.index[a], i) for a, i in u)
        return w if key(w) <= key(inv) else inv

    def to_text(self, w: Word) -> str:
        if is_zero(w):
            return f"ε({w[1]})"
        return ",".join(a + ("^-1" if i else "") for a, i in w)

    def missing_out(self, w: Word) -> bool:
        """True when w₊ or w'₊ is undefined, without building the hooks."""
        w = self.orient(w)
        for u in (w, self.inverse(w)):
            ext = self.extensions(u, True)
            if not ext:
                if self.delete_cohook(u) is None:
                    return True
            elif len(ext) > 1:
                return True
        return False

    def out_degree(self, w: Word) -> int:
        return sum(r is not None for r in (self.end_plus(w), self.start_plus(w)))

    def in_degree(self, w: Word) -> int:
        return sum(r is not None for r in (self.end_minus(w), self.start_minus(w)))

    def tau_period(self, w: Word, bound: int) -> int | None:
        start = self.canon(w)
        cur = start
        for i in range(1, bound + 1):
            cur = self.tau(cur)
            if cur is None:
                return None
            cur = self.canon(cur)
            if cur == start:
                return i
        return None


def enumerate_strings(g: BrauerGraph, max_len: int, alg: OracleAlgebra | None = None) -> list[Word]:
    """Every string of length at most max_len, canonical and deduplicated."""
    alg = alg or OracleAlgebra(g)
    out = {("0", x, None): None for x in g.edges}
    if max_len <= 0:
        return list(out)
    layer = []
    for a in alg.quiver.arrows:
        for inv in (False, True):
            w = ((a.id, inv),)
            if alg.valid(w):
                layer.append(w)
    n = 1
    while layer:
        for w in layer:
            out.setdefault(alg.canon(w), None)
        if n == max_len:
            break
        nxt = []
        for w in layer:
            for sign in (False, True):
                for l in alg.follow[w[-1], sign]:
                    if alg.append_ok(w, l):
                        nxt.append(w + (l,))
        layer = nxt
        n += 1
    return list(out)


@dataclass
class TruncatedArQuiver:
    max_len: int
    nodes: list[Word]
    neighbors: dict[Word, tuple]
    boundary: set[Word] = field(default_factory=set)

    @property
    def mouths(self) -> list[Word]:
        return [w for w in self.nodes if self.neighbors[w][1] is None or self.neighbors[w][3] is None]


def build_truncated_ar(g: BrauerGraph, max_len: int, alg: OracleAlgebra | None = None) -> TruncatedArQuiver:
    alg = alg or OracleAlgebra(g)
    nodes = enumerate_strings(g, max_len, alg)
    nb = {}
    boundary = set()
    for w in nodes:
        ops = (alg.start_minus, alg.end_plus, alg.end_minus, alg.start_plus)
        res = tuple(None if (r := op(w)) is None else alg.canon(r) for op in ops)
        nb[w] = res
        if any(r is not None and not is_zero(r) and len(r) > max_len for r in res):
            boundary.add(w)
    return TruncatedArQuiver(max_len, nodes, nb, boundary)


# -- verification ---------------------------------------------------------------

@dataclass
class VerifyReport:
    graph_name: str
    max_len: int
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def fail(self, check: str, msg: str) -> None:
        self.checks[check] = False
        if len(self.failures) < 50:
            self.failures.append(f"[{check}] {msg}")

    def to_dict(self) -> dict:
        return {"graph": self.graph_name, "max_len": self.max_len, "ok": self.ok, "checks": self.checks,
                "failures": self.failures, "notes": self.notes, "stats": self.stats}


def verify(g: BrauerGraph, max_len: int | None = None, name: str = "", predicates: bool = True,
           component_len: int | None = None, full: bool = True) -> VerifyReport:
    """Compare brute-force results with the graph-only predictions.

    Checks: ``mouths`` (nodes with fewer than two outgoing maps are exactly
    the mouth strings), ``tube_ranks`` (τ-orbit of each mouth string against
    the double-stepped census) and ``tau_omega`` (τ = Ω² on mouth strings).
    With ``full`` also ``mesh`` (τ(w₊) = w'₋ and τ(w'₊) = w₋ on every node),
    ``engine_agreement`` (the string engine finds the same four neighbours)
    and ``degrees`` (in-degree equals out-degree). For representation-infinite
    graphs ``predicates`` checks tube location, same tube and same component.
    """
    # imported here so the oracle core above stays free of walk machinery
    from . import ar
    from .strings import StringEngine, StringWord
    from .walks import census_orbit_lengths, syzygy_half_edge

    if max_len is None:
        max_len = 2 * max(g.multiplicity[v] * g.valency(v) for v in g.vertices)
    rep = VerifyReport(name, max_len)
    for c in ("mouths", "tube_ranks", "tau_omega"):
        rep.checks[c] = True
    alg = OracleAlgebra(g)
    eng = StringEngine(g, alg.quiver)

    def word(sw: StringWord) -> Word:
        if sw.is_zero:
            return ("0", sw.edge, None)
        return tuple((l.arrow, l.inverse) for l in sw.letters)

    mouth_of = {h: alg.canon(word(eng.mouth_string(h))) for h in g.half_edges()}
    predicted = {m for m in mouth_of.values() if is_zero(m) or len(m) <= max_len}

    # (1) mouths
    if full:
        taq = build_truncated_ar(g, max_len, alg)
        nodes = taq.nodes
        found = set(taq.mouths)
    else:
        nodes = enumerate_strings(g, max_len, alg)
        found = {w for w in nodes if alg.missing_out(w)}
    rep.stats["nodes"] = len(nodes)
    for m in sorted(found - predicted, key=str):
        rep.fail("mouths", f"{alg.to_text(m)} has a single outgoing map but is not a mouth string")
    for m in sorted(predicted - found, key=str):
        rep.fail("mouths", f"mouth string {alg.to_text(m)} has two outgoing maps")

    # (2) tube ranks and (3) τ = Ω²
    lengths = census_orbit_lengths(g)
    bound = 2 * len(g.edges)
    for h, m in mouth_of.items():
        r = alg.tau_period(m, bound)
        if r != lengths[h.bar()]:
            rep.fail("tube_ranks", f"τ-period of mouth {alg.to_text(m)} at {h} is {r}, census says {lengths[h.bar()]}")
        h2 = syzygy_half_edge(g, syzygy_half_edge(g, h))
        t = alg.tau(m)
        if t is None or alg.canon(t) != mouth_of[h2]:
            rep.fail("tau_omega", f"τ({alg.to_text(m)}) != mouth at {h2}")

    if full:
        for c in ("mesh", "engine_agreement", "degrees"):
            rep.checks[c] = True
        for w in nodes:
            sm, ep, em, sp = taq.neighbors[w]
            if (ep is None) + (sp is None) != (em is None) + (sm is None):
                rep.fail("degrees", f"{alg.to_text(w)}: in-degree differs from out-degree")
            if ep is not None and sm is not None:
                t = alg.tau(ep)
                if t is None or alg.canon(t) != sm:
                    rep.fail("mesh", f"τ(w₊) != w'₋ at {alg.to_text(w)}")
            if sp is not None and em is not None:
                t = alg.tau(sp)
                if t is None or alg.canon(t) != em:
                    rep.fail("mesh", f"τ(w'₊) != w₋ at {alg.to_text(w)}")
            sw = StringWord.zero(w[1]) if is_zero(w) else StringWord(tuple(eng_letter(l) for l in w))
            n = ar.neighbors(eng, sw)
            mine = tuple(None if u is None else alg.canon(word(u)) for u in n)
            if mine != taq.neighbors[w]:
                rep.fail("engine_agreement", f"neighbours of {alg.to_text(w)} differ")

    if predicates and not classify_edges(g).tree_case:
        rep.checks["predicates"] = True
        _verify_predicates(g, alg, eng, word, rep, component_len or max_len)
    return rep


def eng_letter(l):
    from .strings import Letter
    return Letter(l[0], l[1])


def _ray_to_mouth(alg: OracleAlgebra, w: Word, limit: int) -> Word | None:
    for op in (alg.start_minus, alg.end_plus, alg.end_minus, alg.start_plus):
        cur = alg.orient(w)
        for _ in range(limit + 1):
            if alg.out_degree(cur) < 2:
                return alg.canon(cur)
            cur = op(cur)
            if cur is None:
                break
    return None


def _component_search(alg: OracleAlgebra, start: Word, goal: Word, max_len: int) -> bool:
    start, goal = alg.canon(start), alg.canon(goal)
    seen = {start}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        if w == goal:
            return True
        for op in (alg.start_minus, alg.end_plus, alg.end_minus, alg.start_plus):
            u = op(w)
            if u is None:
                continue
            u = alg.canon(u)
            if (is_zero(u) or len(u) <= max_len) and u not in seen:
                seen.add(u)
                todo.append(u)
    return False


def _verify_predicates(g, alg, eng, word, rep, comp_len) -> None:
    from . import ar

    bound = 2 * len(g.edges)
    ec = classify_edges(g)
    for x in g.edges:
        s = ("0", x, None)
        r = alg.canon(word(eng.radical_string(x)))
        for label, w, got in (("S", s, ar.locate_simple(g, x)), ("radP", r, ar.locate_radical(g, x))):
            in_tube = alg.tau_period(w, bound) is not None
            if in_tube != (got == ar.EXCEPTIONAL_TUBE):
                rep.fail("predicates", f"{label}({x}): oracle tube={in_tube}, predicate {got}")
        if ec.is_exceptional(x):
            m1 = _ray_to_mouth(alg, s, 4 * bound)
            m2 = _ray_to_mouth(alg, r, 4 * bound)
            if m1 is None or m2 is None:
                rep.fail("predicates", f"no mouth found from S({x}) or rad P({x})")
                continue
            orbit = {m1}
            cur = m1
            for _ in range(bound):
                cur = alg.canon(alg.tau(cur))
                orbit.add(cur)
            same = m2 in orbit
            if same != ar.same_tube_simple_radical(g, x):
                rep.fail("predicates", f"same tube for {x}: oracle {same}, predicate {not same}")
    non_exc = [x for x in g.edges if not ec.is_exceptional(x)]
    unconfirmed = 0
    for x in non_exc:
        for y in non_exc:
            pred = ar.same_component(g, x, y)
            found = _component_search(alg, ("0", x, None), word(eng.radical_string(y)), comp_len)
            if found and not pred:
                rep.fail("predicates", f"S({x}) and rad P({y}) connected but predicate says no")
            elif pred and not found:
                unconfirmed += 1
    if unconfirmed:
        rep.notes.append(f"{unconfirmed} same-component pairs not reached within length {comp_len}")
    rep.stats["unconfirmed_pairs"] = unconfirmed


def sweep(max_edges: int = 4, max_mult: int = 2, max_len: int = 10, predicates: bool = False,
          full: bool = False):
    """Verify every corpus graph; yields (graph, report)."""
    from .corpus import brauer_graphs

    for i, g in enumerate(brauer_graphs(max_edges, max_mult)):
        yield g, verify(g, max_len, name=f"corpus-{i}", predicates=predicates, full=full)
