"""Exhaustive generation of small Brauer graphs up to isomorphism.

A ribbon graph on E edges is a permutation ``sigma`` of the darts
0..2E-1 (its cycles are the anticlockwise orders at the vertices) together
with the fixed involution ``d -> d ^ 1`` pairing the two halves of an edge.
Two labelled structures are isomorphic when a relabelling of darts carries
one onto the other; a canonical code is obtained by labelling the darts in
breadth-first order from every possible root and keeping the least code.
"""

from __future__ import annotations

from collections import deque
from itertools import permutations, product

from .graph import BrauerGraph, HalfEdge


def _cycles(sigma: tuple[int, ...]) -> list[list[int]]:
    seen = set()
    out = []
    for d in range(len(sigma)):
        if d in seen:
            continue
        cyc = [d]
        seen.add(d)
        k = sigma[d]
        while k != d:
            cyc.append(k)
            seen.add(k)
            k = sigma[k]
        out.append(cyc)
    return out


def _connected(sigma: tuple[int, ...]) -> bool:
    n = len(sigma)
    seen = {0}
    todo = [0]
    while todo:
        d = todo.pop()
        for k in (sigma[d], d ^ 1):
            if k not in seen:
                seen.add(k)
                todo.append(k)
    return len(seen) == n


def canonical_code(sigma: tuple[int, ...], weight: tuple[int, ...]) -> tuple:
    """Least breadth-first code of (sigma, per-dart vertex weight) over all roots."""
    n = len(sigma)
    best = None
    for root in range(n):
        label = {root: 0}
        order = [root]
        todo = deque([root])
        while todo:
            d = todo.popleft()
            for k in (sigma[d], d ^ 1):
                if k not in label:
                    label[k] = len(order)
                    order.append(k)
                    todo.append(k)
        code = tuple((label[sigma[d]], label[d ^ 1], weight[d]) for d in order)
        if best is None or code < best:
            best = code
    return best


def ribbon_structures(n_edges: int) -> list[tuple[int, ...]]:
    """One permutation per isomorphism class of connected ribbon graphs."""
    seen = set()
    out = []
    ones = (1,) * (2 * n_edges)
    for sigma in permutations(range(2 * n_edges)):
        if not _connected(sigma):
            continue
        code = canonical_code(sigma, ones)
        if code in seen:
            continue
        seen.add(code)
        out.append(sigma)
    return out


def to_graph(sigma: tuple[int, ...], mult: tuple[int, ...]) -> BrauerGraph:
    cycles = _cycles(sigma)
    vname = {d: f"v{i}" for i, cyc in enumerate(cycles) for d in cyc}
    edges = {f"x{j}": (vname[2 * j], vname[2 * j + 1]) for j in range(len(sigma) // 2)}
    orders = {f"v{i}": tuple(HalfEdge(f"x{d // 2}", d % 2) for d in cyc) for i, cyc in enumerate(cycles)}
    multiplicity = {f"v{i}": mult[i] for i in range(len(cycles))}
    return BrauerGraph(multiplicity, edges, orders)


def brauer_graphs(max_edges: int = 4, max_mult: int = 2, min_edges: int = 1):
    """All connected Brauer graphs with the given bounds, one per isomorphism class."""
    for n in range(min_edges, max_edges + 1):
        for sigma in ribbon_structures(n):
            cycles = _cycles(sigma)
            seen = set()
            for mult in product(range(1, max_mult + 1), repeat=len(cycles)):
                weight = [0] * len(sigma)
                for i, cyc in enumerate(cycles):
                    for d in cyc:
                        weight[d] = mult[i]
                code = canonical_code(sigma, tuple(weight))
                if code in seen:
                    continue
                seen.add(code)
                yield to_graph(sigma, mult)
