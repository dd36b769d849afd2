"""Bounded pieces of the stable Auslander-Reiten quiver and location questions.

Every string module M(w) has up to four neighbours: the end of w carries
w₋ → w → w₊ and the start carries w'₋ → w → w'₊, where

    w₊  = w₋c if w ends on a peak,   w_h otherwise
    w₋  = w₋h if w ends in a deep,   w_c otherwise
    w'₊ = ₋cw if w starts on a peak, _hw otherwise
    w'₋ = ₋hw if w starts in a deep, _cw otherwise

and τ(w₊) = w'₋, τ(w'₊) = w₋. End-of-word surgery runs along one diagonal
of the mesh and start-of-word surgery along the other. A missing slot marks
the mouth of a tube.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .classify import DOMESTIC_1, classify
from .graph import BrauerGraph, classify_edges
from .strings import StringEngine, StringError, StringWord
from .walks import Flavor, census_orbit_lengths, walk_census


class LocationError(ValueError):
    pass


SLOTS = ("start_minus", "end_plus", "end_minus", "start_plus")
OUT_SLOTS = ("end_plus", "start_plus")
IN_SLOTS = ("end_minus", "start_minus")


class Neighbors(NamedTuple):
    start_minus: StringWord | None   # w'₋
    end_plus: StringWord | None      # w₊
    end_minus: StringWord | None     # w₋
    start_plus: StringWord | None    # w'₊

    def missing(self) -> list[str]:
        return [s for s in SLOTS if getattr(self, s) is None]


def neighbors(engine: StringEngine, w: StringWord) -> Neighbors:
    """The four neighbours of M(w), as canonical words (None where undefined)."""
    c = engine.canonical_form
    out = []
    for s in SLOTS:
        r = getattr(engine, s)(w)
        out.append(None if r is None else c(r))
    return Neighbors(*out)


def is_mouth(engine: StringEngine, w: StringWord) -> bool:
    n = neighbors(engine, w)
    return n.end_plus is None or n.start_plus is None


def ray(engine: StringEngine, w: StringWord, slot: str, steps: int) -> list[StringWord]:
    """Follow one slot repeatedly; the list stops early at a mouth."""
    op = getattr(engine, slot)
    out = [engine.oriented(w)]
    for _ in range(steps):
        nxt = op(out[-1])
        if nxt is None:
            break
        out.append(nxt)
    return out


# -- fragments ----------------------------------------------------------------

@dataclass
class ArFragment:
    seed: StringWord
    radius: int
    nodes: list[StringWord] = field(default_factory=list)
    depth: dict[StringWord, int] = field(default_factory=dict)
    # (source, target, slot recorded at the source)
    edges: list[tuple[StringWord, StringWord, str]] = field(default_factory=list)
    tau: dict[StringWord, StringWord] = field(default_factory=dict)
    mouths: list[StringWord] = field(default_factory=list)
    projectives: dict[str, tuple[StringWord, StringWord]] = field(default_factory=dict)
    mesh_failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "seed": str(self.seed),
            "radius": self.radius,
            "nodes": [{"word": str(w), "depth": self.depth[w], "length": len(w), "mouth": w in self.mouths}
                      for w in self.nodes],
            "maps": [{"from": str(a), "to": str(b), "slot": s} for a, b, s in self.edges],
            "tau": [{"from": str(a), "to": str(b)} for a, b in self.tau.items()],
            "projectives": [{"P": x, "radical": str(r), "top_quotient": str(t)}
                            for x, (r, t) in self.projectives.items()],
            "mesh_failures": self.mesh_failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        lines = ["digraph ar {"]
        for w in self.nodes:
            shape = ', shape=box' if w in self.mouths else ""
            lines.append(f'  "{w}" [label="{w}"{shape}];')
        for a, b, s in self.edges:
            lines.append(f'  "{a}" -> "{b}" [label="{s}"];')
        for x, (r, t) in self.projectives.items():
            lines.append(f'  "P({x})" [shape=doublecircle];')
            lines.append(f'  "{r}" -> "P({x})";')
            lines.append(f'  "P({x})" -> "{t}";')
        for a, b in self.tau.items():
            lines.append(f'  "{a}" -> "{b}" [style=dashed, constraint=false];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def explore(engine: StringEngine, seed: StringWord, radius: int = 10,
            with_projectives: bool = False) -> ArFragment:
    """Breadth-first piece of the component of M(seed), `radius` maps deep."""
    if radius < 1:
        raise ValueError("radius must be at least 1")
    ok, why = engine.check(seed)
    if not ok:
        raise StringError(f"seed {seed} is not a string ({why})")
    c = engine.canonical_form
    s0 = c(seed)
    frag = ArFragment(s0, radius)
    frag.nodes.append(s0)
    frag.depth[s0] = 0
    todo = deque([s0])
    nbrs: dict[StringWord, Neighbors] = {}
    while todo:
        w = todo.popleft()
        n = neighbors(engine, w)
        nbrs[w] = n
        if n.end_plus is None or n.start_plus is None:
            frag.mouths.append(w)
        for s in SLOTS:
            u = getattr(n, s)
            if u is None:
                continue
            if s in OUT_SLOTS:
                frag.edges.append((w, u, s))
            if u not in frag.depth and frag.depth[w] < radius:
                frag.depth[u] = frag.depth[w] + 1
                frag.nodes.append(u)
                todo.append(u)
    known = set(frag.depth)
    # maps into the fragment from outside are only seen from their target
    for w in frag.nodes:
        n = nbrs[w]
        for s in IN_SLOTS:
            u = getattr(n, s)
            if u is not None and u not in known:
                frag.edges.append((u, w, s))
    for w in frag.nodes:
        t = c(engine.tau(w))
        if t in known:
            frag.tau[w] = t
        n = nbrs[w]
        if n.end_plus is not None and n.start_minus is not None:
            if c(engine.tau(n.end_plus)) != n.start_minus:
                frag.mesh_failures.append(f"tau({n.end_plus}) != {n.start_minus}")
        if n.start_plus is not None and n.end_minus is not None:
            if c(engine.tau(n.start_plus)) != n.end_minus:
                frag.mesh_failures.append(f"tau({n.start_plus}) != {n.end_minus}")
    if with_projectives:
        for x in engine.graph.edges:
            r = c(engine.radical_string(x))
            if r in known:
                frag.projectives[x] = (r, c(engine.top_quotient_string(x)))
    return frag


# -- tubes --------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentVerdict:
    kind: str               # "Tube", "EuclideanCandidate" or "UnboundedCandidate"
    rank: int | None
    evidence: dict

    def __str__(self) -> str:
        return f"Tube({self.rank})" if self.kind == "Tube" else self.kind

    def to_dict(self) -> dict:
        return {"verdict": str(self), "kind": self.kind, "rank": self.rank, "evidence": self.evidence}


def tau_period(engine: StringEngine, w: StringWord, bound: int) -> int | None:
    c = engine.canonical_form
    start = c(w)
    cur = start
    for i in range(1, bound + 1):
        cur = c(engine.tau(cur))
        if cur == start:
            return i
    return None


def find_mouth(engine: StringEngine, seed: StringWord, radius: int):
    """Walk the four rays through seed; return (mouth, steps) for the first mouth met."""
    best = None
    for slot in SLOTS:
        for i, w in enumerate(ray(engine, seed, slot, radius)):
            if is_mouth(engine, w):
                if best is None or i < best[1]:
                    best = (engine.canonical_form(w), i)
                break
    return best


def mouth_half_edges(engine: StringEngine) -> dict[StringWord, list]:
    """Canonical mouth word -> half-edges it is attached to.

    M(h) lies in the tube of the double-stepped walk through bar(h), since
    the syzygy runs along the Green walk starting at the opposite half-edge.
    """
    out: dict[StringWord, list] = {}
    for m in engine.mouth_strings():
        out.setdefault(engine.canonical_form(m.word), []).append(m.half_edge)
    return out


def tube_rank(engine: StringEngine, seed: StringWord, radius: int = 10) -> ComponentVerdict:
    g = engine.graph
    bound = 2 * len(g.edges)
    period = tau_period(engine, seed, bound)
    found = find_mouth(engine, seed, radius)
    evidence: dict = {}
    if found is not None:
        m, steps = found
        hs = mouth_half_edges(engine).get(m, [])
        lengths = census_orbit_lengths(g)
        evidence.update(mouth=str(m), steps_to_mouth=steps,
                        mouth_half_edges=[str(h) for h in hs],
                        census_rank=lengths[hs[0].bar()] if hs else None)
    if period is not None:
        evidence["tau_period"] = period
        return ComponentVerdict("Tube", period, evidence)
    c = engine.canonical_form
    cur = c(seed)
    growth = [len(cur)]
    for _ in range(bound):
        cur = c(engine.tau(cur))
        growth.append(len(cur))
    evidence["tau_orbit_lengths"] = growth
    rep = classify(g)
    kind = "EuclideanCandidate" if rep.domestic else "UnboundedCandidate"
    return ComponentVerdict(kind, None, evidence)


# -- location predicates ------------------------------------------------------

EXCEPTIONAL_TUBE = "ExceptionalTube"
NON_TUBE = "NonTube"


def _gate(g: BrauerGraph):
    ec = classify_edges(g)
    if ec.tree_case:
        raise LocationError("Brauer tree: every module lies in the single finite component")
    return ec


def _check_edge(g: BrauerGraph, x: str):
    if x not in g.edges:
        raise LocationError(f"unknown edge {x}")


def locate_simple(g: BrauerGraph, x: str) -> str:
    _check_edge(g, x)
    ec = _gate(g)
    return EXCEPTIONAL_TUBE if ec.is_exceptional(x) else NON_TUBE


def locate_radical(g: BrauerGraph, x: str) -> str:
    _check_edge(g, x)
    ec = _gate(g)
    return EXCEPTIONAL_TUBE if ec.is_exceptional(x) else NON_TUBE


def verify_location(engine: StringEngine, x: str, which: str = "simple", radius: int = 12) -> dict:
    """Exploration evidence for the location of S(x) or rad P(x).

    Reports whether a mouth is met along the four rays through the module
    within `radius` steps, whether every ray stays longer than the module
    itself, and whether τ closes up within 2·|edges| steps.
    """
    w = engine.zero_string(x) if which == "simple" else engine.radical_string(x)
    found = find_mouth(engine, w, radius)
    grows = True
    base = len(w)
    for slot in SLOTS:
        r = ray(engine, w, slot, radius)
        if len(r) <= radius or any(len(u) <= base for u in r[1:]):
            grows = False
    period = tau_period(engine, w, 2 * len(engine.graph.edges))
    return {
        "module": str(engine.canonical_form(w)),
        "mouth_reached": found is not None,
        "mouth": str(found[0]) if found else None,
        "steps_to_mouth": found[1] if found else None,
        "rays_grow": grows,
        "tau_period": period,
        "in_tube": period is not None,
    }


def same_tube_simple_radical(g: BrauerGraph, x: str) -> bool:
    _check_edge(g, x)
    ec = _gate(g)
    if not ec.is_exceptional(x):
        raise LocationError(f"edge {x} is not exceptional")
    census = walk_census(g, Flavor.DOUBLE)
    a, b = (h for h in g.half_edges() if h.edge == x)
    return b in census.orbit_of(a).steps


def connecting_path(g: BrauerGraph, x: str, y: str) -> list[str] | None:
    """Even-length walk x = x1, ..., xn = y through the constrained vertices.

    At each vertex v_i passed between x_i and x_(i+1) the two edges are the
    only non-exceptional edges at v_i; turning back along the same edge
    needs multiplicity 2 there and passing to a new edge multiplicity 1.
    Loops never occur.
    """
    ec = classify_edges(g)
    if g.is_loop(x) or g.is_loop(y):
        return None
    order = list(g.edges)
    # state: (edge just traversed, vertex reached, parity of the length)
    prev: dict[tuple[str, str, int], tuple[str, str, int] | None] = {}
    todo = deque()
    for v in g.edges[x]:
        st = (x, v, 1)
        prev[st] = None
        todo.append(st)
    while todo:
        st = todo.popleft()
        e, v, parity = st
        if parity == 0 and e == y:
            path = []
            while st is not None:
                path.append(st[0])
                st = prev[st]
            return path[::-1]
        live = {z for z in g.incident_edges(v) if not ec.is_exceptional(z)}
        for z in sorted(live, key=order.index):
            if g.is_loop(z) or not live <= {e, z}:
                continue
            if z == e and g.multiplicity[v] != 2:
                continue
            if z != e and g.multiplicity[v] != 1:
                continue
            nxt = (z, g.other_end(z, v), 1 - parity)
            if nxt not in prev:
                prev[nxt] = st
                todo.append(nxt)
    return None


def same_component(g: BrauerGraph, x: str, y: str) -> bool:
    """Whether S(x) and rad P(y) lie in one component (non-exceptional x, y)."""
    for z in (x, y):
        _check_edge(g, z)
    ec = _gate(g)
    for z in (x, y):
        if ec.is_exceptional(z):
            raise LocationError(f"edge {z} is exceptional")
    if classify(g).rep_type == DOMESTIC_1:
        return True
    return connecting_path(g, x, y) is not None
