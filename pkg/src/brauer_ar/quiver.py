"""The quiver with relations of a Brauer graph algebra."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .graph import BrauerGraph, HalfEdge


@dataclass(frozen=True)
class Arrow:
    id: str
    vertex: str
    source_half: HalfEdge
    target_half: HalfEdge

    @property
    def source_edge(self) -> str:
        return self.source_half.edge

    @property
    def target_edge(self) -> str:
        return self.target_half.edge


class RelationKind(str, Enum):
    CYCLE_POWER = "CyclePower"
    COMMUTATION = "CommutationDifference"
    FORBIDDEN_PAIR = "ForbiddenPair"


@dataclass(frozen=True)
class Relation:
    kind: RelationKind
    # one arrow-id path for zero relations, two for a commutation difference
    paths: tuple[tuple[str, ...], ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    cycles: dict[str, tuple[str, ...]]
    multiplicity: dict[str, int]
    relations: tuple[Relation, ...]
    single_edge: bool = False

    def __post_init__(self):
        object.__setattr__(self, "by_id", {a.id: a for a in self.arrows})
        object.__setattr__(self, "index", {a.id: i for i, a in enumerate(self.arrows)})
        object.__setattr__(self, "out_of", {a.source_half: a for a in self.arrows})
        object.__setattr__(self, "into", {a.target_half: a for a in self.arrows})

    def arrow(self, aid: str) -> Arrow:
        return self.by_id[aid]

    def cycle_of(self, aid: str) -> str:
        return self.by_id[aid].vertex

    def cycle_from(self, v: str, first: str) -> tuple[str, ...]:
        """Rotation of the cycle at v that starts with the given arrow."""
        cyc = self.cycles.get(v)
        if cyc is None or first not in cyc:
            raise ValueError(f"arrow {first} is not in the cycle of vertex {v}")
        i = cyc.index(first)
        return cyc[i:] + cyc[:i]

    def cycle_power(self, v: str, first: str) -> tuple[str, ...]:
        return self.cycle_from(v, first) * self.multiplicity[v]

    def composable(self, a: str, b: str) -> bool:
        return self.by_id[a].target_edge == self.by_id[b].source_edge

    def to_dot(self) -> str:
        lines = ["digraph quiver {"]
        for x in self.vertices:
            lines.append(f'  "{x}";')
        for a in self.arrows:
            lines.append(f'  "{a.source_edge}" -> "{a.target_edge}" [label="{a.id}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"id": a.id, "vertex": a.vertex, "source": a.source_edge, "target": a.target_edge,
                 "source_half": str(a.source_half), "target_half": str(a.target_half)}
                for a in self.arrows
            ],
            "cycles": {v: list(c) for v, c in self.cycles.items()},
            "relations": [r.to_dict() for r in self.relations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def build_quiver(g: BrauerGraph) -> Quiver:
    """Arrows come from successive half-edges around each non-truncated vertex."""
    arrows: list[Arrow] = []
    cycles: dict[str, tuple[str, ...]] = {}
    mult = dict(g.multiplicity)
    single_edge = len(g.edges) == 1 and all(g.is_truncated_vertex(v) for v in g.vertices)
    if single_edge:
        # u -- v with both ends truncated: one loop with square zero
        (x,) = g.edges
        v = g.edges[x][0]
        h = HalfEdge(x, 0)
        arrows.append(Arrow(f"{v}#0", v, h, h))
        cycles[v] = (arrows[0].id,)
    else:
        for v in g.vertices:
            if g.is_truncated_vertex(v):
                continue
            ids = []
            for k, h in enumerate(g.cyclic_order[v]):
                a = Arrow(f"{v}#{k}", v, h, g.successor(h))
                arrows.append(a)
                ids.append(a.id)
            cycles[v] = tuple(ids)
    out_of = {a.source_half: a for a in arrows}

    relations: list[Relation] = []
    if single_edge:
        a = arrows[0].id
        relations.append(Relation(RelationKind.CYCLE_POWER, ((a, a),)))
    else:
        for x in g.edges:
            ends = [HalfEdge(x, 0), HalfEdge(x, 1)]
            live = [h for h in ends if not g.is_truncated_vertex(g.vertex_of(h))]
            if len(live) == 1:
                first = out_of[live[0]]
                path = tuple(_power(cycles, mult, first)) + (first.id,)
                relations.append(Relation(RelationKind.CYCLE_POWER, (path,)))
            else:
                p0 = tuple(_power(cycles, mult, out_of[live[0]]))
                p1 = tuple(_power(cycles, mult, out_of[live[1]]))
                relations.append(Relation(RelationKind.COMMUTATION, (p0, p1)))
    for a in arrows:
        for b in arrows:
            if a.target_edge == b.source_edge and a.target_half != b.source_half:
                relations.append(Relation(RelationKind.FORBIDDEN_PAIR, ((a.id, b.id),)))
    return Quiver(tuple(g.edges), tuple(arrows), cycles, mult, tuple(relations), single_edge)


def _power(cycles, mult, first: Arrow) -> list[str]:
    cyc = cycles[first.vertex]
    i = cyc.index(first.id)
    return list(cyc[i:] + cyc[:i]) * mult[first.vertex]
