"""Green walks around a Brauer graph and their orbit decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import BrauerGraph, EdgeClass, HalfEdge, classify_edges
from .strings import MouthString, StringEngine


class Flavor(str, Enum):
    ANTICLOCKWISE = "anticlockwise"
    CLOCKWISE = "clockwise"
    DOUBLE = "double"
    DOUBLE_CLOCKWISE = "double-clockwise"
    NONEXC_ANTICLOCKWISE = "nonexceptional"
    NONEXC_CLOCKWISE = "nonexceptional-clockwise"


class WalkError(ValueError):
    pass


@dataclass(frozen=True)
class GreenWalk:
    flavor: Flavor
    steps: tuple[HalfEdge, ...]

    @property
    def start(self) -> HalfEdge:
        return self.steps[0]

    @property
    def period(self) -> int:
        return len(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def step(self, i: int) -> HalfEdge:
        return self.steps[i % len(self.steps)]


@dataclass(frozen=True)
class WalkCensus:
    flavor: Flavor
    walks: tuple[GreenWalk, ...]

    @property
    def lengths(self) -> list[int]:
        return sorted(len(w) for w in self.walks)

    def orbit_of(self, h: HalfEdge) -> GreenWalk:
        for w in self.walks:
            if h in w.steps:
                return w
        raise KeyError(h)

    def to_dict(self) -> dict:
        return {
            "flavor": self.flavor.value,
            "lengths": self.lengths,
            "walks": [{"length": len(w), "steps": [str(h) for h in w.steps]} for w in self.walks],
        }


def _first_live(g: BrauerGraph, h: HalfEdge, nxt, ec: EdgeClass) -> HalfEdge:
    k = nxt(h)
    while ec.is_exceptional(k.edge):
        k = nxt(k)
    return k


def green_step(g: BrauerGraph, h: HalfEdge, flavor: Flavor = Flavor.ANTICLOCKWISE,
               ec: EdgeClass | None = None) -> HalfEdge:
    if flavor is Flavor.ANTICLOCKWISE:
        return g.successor(h).bar()
    if flavor is Flavor.CLOCKWISE:
        return g.predecessor(h).bar()
    if flavor is Flavor.DOUBLE:
        return green_step(g, green_step(g, h))
    if flavor is Flavor.DOUBLE_CLOCKWISE:
        return green_step(g, green_step(g, h, Flavor.CLOCKWISE), Flavor.CLOCKWISE)
    ec = ec or classify_edges(g)
    if ec.tree_case:
        raise WalkError("non-exceptional walks are not defined on a Brauer tree")
    if ec.is_exceptional(h.edge):
        raise WalkError(f"edge {h.edge} is exceptional")
    nxt = g.successor if flavor is Flavor.NONEXC_ANTICLOCKWISE else g.predecessor
    return _first_live(g, h, nxt, ec).bar()


def green_walk(g: BrauerGraph, start: HalfEdge, flavor: Flavor = Flavor.ANTICLOCKWISE,
               ec: EdgeClass | None = None) -> GreenWalk:
    if flavor in (Flavor.NONEXC_ANTICLOCKWISE, Flavor.NONEXC_CLOCKWISE):
        ec = ec or classify_edges(g)
    steps = [start]
    cur = green_step(g, start, flavor, ec)
    while cur != start:
        steps.append(cur)
        cur = green_step(g, cur, flavor, ec)
    return GreenWalk(flavor, tuple(steps))


def _rotate_to_min(g: BrauerGraph, walk: GreenWalk) -> GreenWalk:
    i = min(range(len(walk.steps)), key=lambda j: g.half_edge_key(walk.steps[j]))
    return GreenWalk(walk.flavor, walk.steps[i:] + walk.steps[:i])


def walk_census(g: BrauerGraph, flavor: Flavor = Flavor.ANTICLOCKWISE) -> WalkCensus:
    """Orbit decomposition of the qualifying half-edges under one step.

    The double-stepped census is read off the single-stepped one: a walk of
    even length 2k splits into two walks of length k, an odd walk stays whole.
    """
    if flavor in (Flavor.DOUBLE, Flavor.DOUBLE_CLOCKWISE):
        base = Flavor.ANTICLOCKWISE if flavor is Flavor.DOUBLE else Flavor.CLOCKWISE
        out = []
        for w in walk_census(g, base).walks:
            n = len(w)
            if n % 2:
                parts = [w.steps[0::2] + w.steps[1::2]]
            else:
                parts = [w.steps[0::2], w.steps[1::2]]
            out += [_rotate_to_min(g, GreenWalk(flavor, tuple(p))) for p in parts]
        out.sort(key=lambda w: g.half_edge_key(w.start))
        return WalkCensus(flavor, tuple(out))
    ec = None
    hs = g.half_edges()
    if flavor in (Flavor.NONEXC_ANTICLOCKWISE, Flavor.NONEXC_CLOCKWISE):
        ec = classify_edges(g)
        if ec.tree_case:
            raise WalkError("non-exceptional walks are not defined on a Brauer tree")
        hs = [h for h in hs if not ec.is_exceptional(h.edge)]
    seen: set[HalfEdge] = set()
    out = []
    for h in hs:
        if h in seen:
            continue
        w = green_walk(g, h, flavor, ec)
        seen.update(w.steps)
        out.append(_rotate_to_min(g, w))
    return WalkCensus(flavor, tuple(out))


def syzygy_half_edge(g: BrauerGraph, h: HalfEdge) -> HalfEdge:
    """Half-edge of Ω(M) for the module M of 𝓜 attached to h.

    Writing the Green walk from the opposite half-edge as bar(h), bar(h_1), ...,
    the syzygy of M is attached to h_1, i.e. to successor(bar(h)).
    """
    return green_step(g, h.bar()).bar()


def syzygy_step(engine: StringEngine, m: MouthString) -> MouthString:
    h = syzygy_half_edge(engine.graph, m.half_edge)
    return MouthString(h, engine.mouth_string(h))


def census_orbit_lengths(g: BrauerGraph) -> dict[HalfEdge, int]:
    """Double-stepped orbit length of every half-edge."""
    out = {}
    for w in walk_census(g, Flavor.DOUBLE).walks:
        for h in w.steps:
            out[h] = len(w)
    return out
