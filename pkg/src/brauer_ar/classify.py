"""Representation type, domesticity and tube census read off the graph."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import BrauerGraph
from .walks import Flavor, walk_census


FINITE = "Finite(BrauerTree)"
DOMESTIC_1 = "Domestic(1)"
DOMESTIC_2 = "Domestic(2)"
NON_DOMESTIC = "NonDomestic"


@dataclass(frozen=True)
class Euclidean:
    p: int
    q: int
    m: int
    m_inferred: bool = True


@dataclass(frozen=True)
class CycleData:
    length: int
    n1: int
    n2: int


@dataclass(frozen=True)
class ClassificationReport:
    rep_type: str
    tube_census: tuple[int, ...]
    euclidean: Euclidean | None = None
    cycle_data: CycleData | None = None
    reason: str = ""
    homogeneous_tubes: str | None = None

    @property
    def domestic(self) -> int | None:
        return {DOMESTIC_1: 1, DOMESTIC_2: 2}.get(self.rep_type)

    def to_dict(self, explain: bool = False) -> dict:
        d = {"rep_type": self.rep_type, "tube_census": list(self.tube_census)}
        if self.euclidean:
            e = self.euclidean
            d["euclidean"] = {"p": e.p, "q": e.q, "m": e.m, "m_inferred": e.m_inferred}
        if self.cycle_data:
            c = self.cycle_data
            d["cycle"] = {"l": c.length, "n1": c.n1, "n2": c.n2}
        if self.homogeneous_tubes:
            d["homogeneous_tubes"] = self.homogeneous_tubes
        if explain:
            d["reason"] = self.reason
        return d

    def to_json(self, explain: bool = False) -> str:
        return json.dumps(self.to_dict(explain), indent=2)


def inside_outside_split(g: BrauerGraph) -> tuple[int, int]:
    """Count the non-cycle edges met by each of the two single-stepped walks.

    With a unique cycle the graph has exactly two Green walks; every edge
    off the cycle has both half-edges in one of them. The pair is returned
    with the smaller count first.
    """
    cyc = g.unique_cycle()
    if cyc is None:
        raise ValueError("graph does not have a unique cycle")
    walks = walk_census(g, Flavor.ANTICLOCKWISE).walks
    if len(walks) != 2:
        raise ValueError("expected two Green walks for a unique cycle")
    on_cycle = set(cyc)
    counts = []
    for w in walks:
        counts.append(len({h.edge for h in w.steps} - on_cycle))
    return tuple(sorted(counts))


def classify(g: BrauerGraph) -> ClassificationReport:
    census = tuple(walk_census(g, Flavor.DOUBLE).lengths)
    mults = g.multiplicity.values()
    n = len(g.edges)
    if g.is_brauer_tree():
        return ClassificationReport(FINITE, census, reason="tree with at most one vertex of multiplicity > 1")
    if g.is_tree():
        if sum(1 for e in mults if e == 2) == 2 and all(e <= 2 for e in mults):
            return ClassificationReport(
                DOMESTIC_1, census, Euclidean(n, n, 1),
                reason="tree with exactly two vertices of multiplicity 2, all others 1",
                homogeneous_tubes="infinitely many")
        return ClassificationReport(NON_DOMESTIC, census, reason="tree with too many or too large multiplicities",
                                    homogeneous_tubes="infinitely many")
    cyc = g.unique_cycle()
    if cyc is not None and all(e == 1 for e in mults):
        l = len(cyc)
        n1, n2 = inside_outside_split(g)
        if l % 2:
            p, q = l + 2 * n1, l + 2 * n2
            return ClassificationReport(
                DOMESTIC_1, census, Euclidean(p, q, 1), CycleData(l, n1, n2),
                reason=f"unique simple cycle of odd length {l}, all multiplicities 1",
                homogeneous_tubes="infinitely many")
        p, q = l // 2 + n1, l // 2 + n2
        return ClassificationReport(
            DOMESTIC_2, census, Euclidean(p, q, 2), CycleData(l, n1, n2),
            reason=f"unique simple cycle of even length {l}, all multiplicities 1",
            homogeneous_tubes="infinitely many")
    if cyc is not None:
        why = "unique cycle but some multiplicity exceeds 1"
    else:
        why = f"cycle rank {g.cycle_rank()}"
    return ClassificationReport(NON_DOMESTIC, census, reason=why, homogeneous_tubes="infinitely many")
