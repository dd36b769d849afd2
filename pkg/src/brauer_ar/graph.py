"""Brauer graphs: ribbon graphs with vertex multiplicities.

A graph is given by its vertices (with multiplicities), its edges and, for
every vertex, the anticlockwise cyclic order of the half-edges around it.
Half-edges are ``(edge, side)`` pairs; side 0 sits at the first endpoint of
the edge and side 1 at the second.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Raised for malformed or invalid graph descriptions."""


class HalfEdge(NamedTuple):
    edge: str
    side: int

    def bar(self) -> "HalfEdge":
        return HalfEdge(self.edge, 1 - self.side)

    def __str__(self) -> str:
        return f"{self.edge}.{self.side}"


@dataclass(frozen=True)
class BrauerGraph:
    multiplicity: dict[str, int]
    edges: dict[str, tuple[str, str]]
    cyclic_order: dict[str, tuple[HalfEdge, ...]]
    # derived lookups, filled in __post_init__
    _vertex_of: dict[HalfEdge, str] = field(default_factory=dict, repr=False, compare=False)
    _pos: dict[HalfEdge, int] = field(default_factory=dict, repr=False, compare=False)
    _eidx: dict[str, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._validate()
        for v, order in self.cyclic_order.items():
            for i, h in enumerate(order):
                self._vertex_of[h] = v
                self._pos[h] = i
        self._eidx.update({x: i for i, x in enumerate(self.edges)})

    # -- validation ---------------------------------------------------------

    def _validate(self) -> None:
        if not self.multiplicity:
            raise GraphError("graph has no vertices")
        if not self.edges:
            raise GraphError("graph has no edges")
        for v, e in self.multiplicity.items():
            if not isinstance(e, int) or e < 1:
                raise GraphError(f"vertex {v}: multiplicity must be a positive integer, got {e!r}")
        for x, (a, b) in self.edges.items():
            for end in (a, b):
                if end not in self.multiplicity:
                    raise GraphError(f"edge {x}: unknown vertex {end}")
        seen: dict[HalfEdge, str] = {}
        for v, order in self.cyclic_order.items():
            if v not in self.multiplicity:
                raise GraphError(f"cyclic order given for unknown vertex {v}")
            for h in order:
                if h.edge not in self.edges:
                    raise GraphError(f"vertex {v}: unknown edge {h.edge}")
                if h in seen:
                    raise GraphError(f"half-edge {h} listed twice")
                if self.edges[h.edge][h.side] != v:
                    raise GraphError(f"half-edge {h} is not incident to vertex {v}")
                seen[h] = v
        for x in self.edges:
            for side in (0, 1):
                if HalfEdge(x, side) not in seen:
                    raise GraphError(f"half-edge {x}.{side} missing from cyclic orders")
        for v in self.multiplicity:
            if not self.cyclic_order.get(v):
                raise GraphError(f"vertex {v} is isolated")
        if not self._connected(self.edges):
            raise GraphError("graph is disconnected")

    def _connected(self, edges) -> bool:
        adj: dict[str, set[str]] = {v: set() for v in self.multiplicity}
        for a, b in edges.values():
            adj[a].add(b)
            adj[b].add(a)
        start = next(iter(self.multiplicity))
        seen = {start}
        todo = [start]
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.multiplicity)

    # -- basic navigation ---------------------------------------------------

    @property
    def vertices(self) -> list[str]:
        return list(self.multiplicity)

    def half_edges(self) -> list[HalfEdge]:
        return [HalfEdge(x, s) for x in self.edges for s in (0, 1)]

    def vertex_of(self, h: HalfEdge) -> str:
        return self._vertex_of[h]

    def valency(self, v: str) -> int:
        return len(self.cyclic_order[v])

    def is_loop(self, x: str) -> bool:
        a, b = self.edges[x]
        return a == b

    def is_truncated_vertex(self, v: str) -> bool:
        return self.valency(v) == 1 and self.multiplicity[v] == 1

    def is_truncated_edge(self, x: str) -> bool:
        return any(self.is_truncated_vertex(v) for v in self.edges[x])

    def successor(self, h: HalfEdge) -> HalfEdge:
        order = self.cyclic_order[self._vertex_of[h]]
        return order[(self._pos[h] + 1) % len(order)]

    def predecessor(self, h: HalfEdge) -> HalfEdge:
        order = self.cyclic_order[self._vertex_of[h]]
        return order[(self._pos[h] - 1) % len(order)]

    def half_edge_key(self, h: HalfEdge) -> tuple[int, int]:
        return (self._eidx[h.edge], h.side)

    def incident_edges(self, v: str) -> list[str]:
        out: list[str] = []
        for h in self.cyclic_order[v]:
            if h.edge not in out:
                out.append(h.edge)
        return out

    def other_end(self, x: str, v: str) -> str:
        a, b = self.edges[x]
        return b if a == v else a

    # -- shape --------------------------------------------------------------

    def cycle_rank(self) -> int:
        return len(self.edges) - len(self.multiplicity) + 1

    def is_tree(self) -> bool:
        return self.cycle_rank() == 0

    def is_brauer_tree(self) -> bool:
        return self.is_tree() and sum(1 for e in self.multiplicity.values() if e > 1) <= 1

    def bridges(self) -> set[str]:
        """Edges whose removal disconnects the graph (loops never qualify)."""
        out = set()
        for x in self.edges:
            if self.is_loop(x):
                continue
            rest = {y: ends for y, ends in self.edges.items() if y != x}
            if not self._connected(rest):
                out.add(x)
        return out

    def cycle_edges(self) -> set[str]:
        return set(self.edges) - self.bridges()

    def cycle_vertices(self) -> set[str]:
        return {v for x in self.cycle_edges() for v in self.edges[x]}

    def unique_cycle(self) -> list[str] | None:
        """Edges of the unique cycle, in traversal order, when the cycle rank is 1."""
        if self.cycle_rank() != 1:
            return None
        on_cycle = self.cycle_edges()
        first = next(x for x in self.edges if x in on_cycle)
        if self.is_loop(first):
            return [first]
        start, v = self.edges[first]
        path = [first]
        while v != start:
            nxt = next(y for y in self.incident_edges(v) if y in on_cycle and y not in path)
            path.append(nxt)
            v = self.other_end(nxt, v)
        return path

    def component_side(self, x: str, v: str) -> set[str]:
        """Vertices reachable from v without crossing edge x."""
        adj: dict[str, set[str]] = {u: set() for u in self.multiplicity}
        for y, (a, b) in self.edges.items():
            if y != x:
                adj[a].add(b)
                adj[b].add(a)
        seen = {v}
        todo = deque([v])
        while todo:
            for w in adj[todo.popleft()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return seen

    # -- serialization ------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"vertex {v} {e}" for v, e in self.multiplicity.items()]
        lines += [f"edge {x} {a} {b}" for x, (a, b) in self.edges.items()]
        for v, order in self.cyclic_order.items():
            refs = [str(h) if self.is_loop(h.edge) else h.edge for h in order]
            lines.append(f"order {v}: " + " ".join(refs))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "vertices": [{"name": v, "multiplicity": e} for v, e in self.multiplicity.items()],
            "edges": [{"name": x, "ends": list(ends)} for x, ends in self.edges.items()],
            "cyclic_order": {v: [str(h) for h in order] for v, order in self.cyclic_order.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def make_graph(multiplicity: dict[str, int], edges: dict[str, tuple[str, str]],
               orders: dict[str, Iterable]) -> BrauerGraph:
    """Build a graph from plain data; orders may name edges or HalfEdges."""
    cyc: dict[str, tuple[HalfEdge, ...]] = {}
    for v, refs in orders.items():
        loop_seen: dict[str, int] = {}
        hs = []
        for r in refs:
            if isinstance(r, HalfEdge):
                hs.append(r)
                continue
            hs.append(_resolve_ref(str(r), v, edges, loop_seen))
        cyc[v] = tuple(hs)
    # vertices of valency <= 2 have a unique cyclic order, so it may be omitted
    for v in multiplicity:
        if v in cyc:
            continue
        hs = [HalfEdge(x, s) for x, ends in edges.items() for s in (0, 1) if ends[s] == v]
        if len(hs) > 2:
            raise GraphError(f"vertex {v}: cyclic order required for valency {len(hs)}")
        cyc[v] = tuple(hs)
    return BrauerGraph(dict(multiplicity), dict(edges), cyc)


def _resolve_ref(ref: str, v: str, edges, loop_seen: dict[str, int]) -> HalfEdge:
    name, dot, side = ref.rpartition(".")
    if dot and name in edges and side in ("0", "1"):
        h = HalfEdge(name, int(side))
        if edges[name][h.side] != v:
            raise GraphError(f"half-edge {ref} is not incident to vertex {v}")
        return h
    if ref not in edges:
        raise GraphError(f"vertex {v}: unknown edge {ref}")
    a, b = edges[ref]
    if a == b:
        if a != v:
            raise GraphError(f"half-edge {ref} is not incident to vertex {v}")
        # bare loop names: sides by order of appearance
        k = loop_seen.get(ref, 0)
        if k > 1:
            raise GraphError(f"loop {ref} listed more than twice at {v}")
        loop_seen[ref] = k + 1
        return HalfEdge(ref, k)
    if v == a:
        return HalfEdge(ref, 0)
    if v == b:
        return HalfEdge(ref, 1)
    raise GraphError(f"half-edge {ref} is not incident to vertex {v}")


def parse_graph(text: str) -> BrauerGraph:
    multiplicity: dict[str, int] = {}
    edges: dict[str, tuple[str, str]] = {}
    orders: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        if word == "vertex":
            parts = rest.split()
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected 'vertex <name> <multiplicity>'")
            name, mult = parts
            if name in multiplicity:
                raise GraphError(f"line {lineno}: duplicate vertex {name}")
            try:
                multiplicity[name] = int(mult)
            except ValueError:
                raise GraphError(f"line {lineno}: bad multiplicity {mult!r}") from None
            if multiplicity[name] < 1:
                raise GraphError(f"line {lineno}: multiplicity of {name} must be >= 1")
        elif word == "edge":
            parts = rest.split()
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: expected 'edge <name> <vertexA> <vertexB>'")
            name, a, b = parts
            if name in edges:
                raise GraphError(f"line {lineno}: duplicate edge {name}")
            for end in (a, b):
                if end not in multiplicity:
                    raise GraphError(f"line {lineno}: edge {name} names unknown vertex {end}")
            edges[name] = (a, b)
        elif word == "order":
            head, colon, refs = rest.partition(":")
            v = head.strip()
            if not colon or not v:
                raise GraphError(f"line {lineno}: expected 'order <vertex>: <half-edges>'")
            if v not in multiplicity:
                raise GraphError(f"line {lineno}: order for unknown vertex {v}")
            if v in orders:
                raise GraphError(f"line {lineno}: duplicate order for {v}")
            orders[v] = refs.split()
        else:
            raise GraphError(f"line {lineno}: unknown directive {word!r}")
    return make_graph(multiplicity, edges, orders)


def load_graph(path) -> BrauerGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- exceptional edges ---------------------------------------------------------

@dataclass(frozen=True)
class ExceptionalSubtree:
    edges: frozenset[str]
    connecting_vertex: str


@dataclass(frozen=True)
class EdgeClass:
    exceptional: frozenset[str]
    non_exceptional: frozenset[str]
    subtrees: tuple[ExceptionalSubtree, ...]
    tree_case: bool = False

    def is_exceptional(self, x: str) -> bool:
        return x in self.exceptional

    def to_dict(self) -> dict:
        return {
            "tree_case": self.tree_case,
            "exceptional": sorted(self.exceptional),
            "non_exceptional": sorted(self.non_exceptional),
            "exceptional_subtrees": [
                {"edges": sorted(t.edges), "connecting_vertex": t.connecting_vertex}
                for t in self.subtrees
            ],
        }


def special_vertices(g: BrauerGraph) -> set[str]:
    """Vertices on a cycle or of multiplicity greater than one."""
    return g.cycle_vertices() | {v for v, e in g.multiplicity.items() if e > 1}


def classify_edges(g: BrauerGraph) -> EdgeClass:
    """Split edges into exceptional and non-exceptional ones.

    An edge is non-exceptional when it lies on a cycle or on a simple path
    joining two special vertices; for a bridge the latter means both sides
    of it contain a special vertex. Brauer trees are reported with every
    edge non-exceptional and ``tree_case`` set.
    """
    if g.is_brauer_tree():
        return EdgeClass(frozenset(), frozenset(g.edges), (), tree_case=True)
    special = special_vertices(g)
    bridges = g.bridges()
    non_exc = set()
    for x in g.edges:
        if x not in bridges:
            non_exc.add(x)
            continue
        a, b = g.edges[x]
        side_a = g.component_side(x, a)
        side_b = set(g.multiplicity) - side_a
        if side_a & special and side_b & special:
            non_exc.add(x)
    exc = set(g.edges) - non_exc
    core_vertices = {v for x in non_exc for v in g.edges[x]}
    # components of the exceptional part, each attached at one core vertex
    branches: dict[str, set[str]] = {}
    left = [x for x in g.edges if x in exc]
    done: set[str] = set()
    for x in left:
        if x in done:
            continue
        comp = {x}
        todo = [x]
        while todo:
            y = todo.pop()
            for v in g.edges[y]:
                if v in core_vertices:
                    continue
                for z in g.incident_edges(v):
                    if z in exc and z not in comp:
                        comp.add(z)
                        todo.append(z)
        done |= comp
        verts = {v for y in comp for v in g.edges[y]}
        attach = sorted(verts & core_vertices, key=g.vertices.index)
        branches.setdefault(attach[0], set()).update(comp)
    # branches at a common vertex merge into one maximal subtree
    subtrees = tuple(ExceptionalSubtree(frozenset(es), v) for v, es in branches.items())
    return EdgeClass(frozenset(exc), frozenset(non_exc), subtrees)
