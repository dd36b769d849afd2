"""Command line front end: ``brauer-ar <subcommand> ...``.

Every graph argument is a path to a ``.bg`` file; the bundled examples can be
named directly (``G1`` to ``G4``) when no such file exists. Output is
deterministic. Exit status is 0 on success, 1 on a domain error (bad graph,
bad string, undefined question, failed verification) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import ar
from .classify import classify
from .fixtures import NAMES, load_fixture
from .graph import GraphError, classify_edges, load_graph
from .quiver import build_quiver
from .strings import StringEngine, StringError, parse_string
from .walks import Flavor, WalkError, walk_census


class UsageError(Exception):
    pass


def _graph(path: str):
    if not os.path.exists(path) and path in NAMES:
        return load_fixture(path)
    try:
        return load_graph(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def cmd_validate(args) -> int:
    g = _graph(args.graph)
    info = {
        "valid": True,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "cycle_rank": g.cycle_rank(),
        "brauer_tree": g.is_brauer_tree(),
    }
    _emit(info)
    return 0


def cmd_quiver(args) -> int:
    q = build_quiver(_graph(args.graph))
    if args.format == "dot":
        sys.stdout.write(q.to_dot())
    elif args.format == "json":
        print(q.to_json())
    else:
        for a in q.arrows:
            print(f"{a.id}: {a.source_edge} -> {a.target_edge}  (at {a.vertex})")
        for r in q.relations:
            print(f"{r.kind.value}: " + " | ".join(".".join(p) for p in r.paths))
    return 0


def cmd_walks(args) -> int:
    census = walk_census(_graph(args.graph), Flavor(args.flavor))
    if args.format == "json":
        _emit(census.to_dict())
        return 0
    for w in census.walks:
        print(f"[{len(w)}] ({' '.join(str(h) for h in w.steps)})")
    print("lengths:", " ".join(map(str, census.lengths)))
    return 0


def cmd_classify(args) -> int:
    print(classify(_graph(args.graph)).to_json(explain=args.explain))
    return 0


def cmd_component(args) -> int:
    g = _graph(args.graph)
    eng = StringEngine(g)
    seed = parse_string(args.seed)
    frag = ar.explore(eng, seed, args.radius, with_projectives=args.with_projectives)
    if args.format == "dot":
        sys.stdout.write(frag.to_dot())
        return 0
    out = frag.to_dict()
    out["verdict"] = ar.tube_rank(eng, seed, args.radius).to_dict()
    _emit(out)
    return 0


def cmd_locate(args) -> int:
    g = _graph(args.graph)
    x = args.edge
    out = {
        "edge": x,
        "exceptional": classify_edges(g).is_exceptional(x) if x in g.edges else None,
        "simple": ar.locate_simple(g, x),
        "radical": ar.locate_radical(g, x),
    }
    if out["exceptional"]:
        out["same_tube"] = ar.same_tube_simple_radical(g, x)
    if args.verify:
        eng = StringEngine(g)
        out["evidence"] = {w: ar.verify_location(eng, x, w, args.radius) for w in ("simple", "radical")}
    _emit(out)
    return 0


def cmd_same_component(args) -> int:
    g = _graph(args.graph)
    same = ar.same_component(g, args.x, args.y)
    _emit({"x": args.x, "y": args.y, "same_component": same, "path": ar.connecting_path(g, args.x, args.y)})
    return 0


def cmd_oracle_verify(args) -> int:
    from .oracle import verify

    g = _graph(args.graph)
    rep = verify(g, args.max_len, name=args.graph, predicates=not args.no_predicates)
    _emit(rep.to_dict())
    return 0 if rep.ok else 1


def _sweep_one(job):
    from .oracle import verify

    i, g, max_len, predicates, full = job
    rep = verify(g, max_len, name=f"corpus-{i}", predicates=predicates, full=full)
    return rep.to_dict() | {"graph_text": g.to_text()} if not rep.ok else {"ok": True, "nodes": rep.stats["nodes"]}


def cmd_oracle_sweep(args) -> int:
    from .corpus import brauer_graphs

    jobs = [(i, g, args.max_len, args.predicates, args.full)
            for i, g in enumerate(brauer_graphs(args.edges, args.mult))]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(_sweep_one, jobs, chunksize=8))
    else:
        results = [_sweep_one(j) for j in jobs]
    bad = [r for r in results if not r["ok"]]
    _emit({
        "graphs": len(results),
        "max_edges": args.edges,
        "max_mult": args.mult,
        "max_len": args.max_len,
        "failed": len(bad),
        "failures": bad[:20],
    })
    return 0 if not bad else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brauer-ar", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="parse and check a graph file")
    s.add_argument("graph")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("quiver", help="quiver and relations of the algebra")
    s.add_argument("graph")
    s.add_argument("--format", choices=("json", "dot", "text"), default="json")
    s.set_defaults(func=cmd_quiver)

    s = sub.add_parser("walks", help="Green walk orbits")
    s.add_argument("graph")
    s.add_argument("--flavor", choices=[f.value for f in Flavor], default=Flavor.ANTICLOCKWISE.value)
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=cmd_walks)

    s = sub.add_parser("classify", help="representation type and tube census")
    s.add_argument("graph")
    s.add_argument("--explain", action="store_true", help="say which shape criterion fired")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("component", help="bounded piece of the stable AR component of a string module")
    s.add_argument("graph")
    s.add_argument("--seed", required=True, help="string such as 'b#0,b#1,e#1^-1' or 'ε(3)'")
    s.add_argument("--radius", type=int, default=10)
    s.add_argument("--with-projectives", action="store_true")
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.set_defaults(func=cmd_component)

    s = sub.add_parser("locate", help="where S(x) and rad P(x) live")
    s.add_argument("graph")
    s.add_argument("--edge", required=True)
    s.add_argument("--verify", action="store_true", help="add bounded exploration evidence")
    s.add_argument("--radius", type=int, default=12)
    s.set_defaults(func=cmd_locate)

    s = sub.add_parser("same-component", help="do S(x) and rad P(y) share a component")
    s.add_argument("graph")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_same_component)

    s = sub.add_parser("oracle-verify", help="brute-force check of one graph")
    s.add_argument("graph")
    s.add_argument("--max-len", type=int, default=None, help="string length bound (default 2·max e_v·val(v))")
    s.add_argument("--no-predicates", action="store_true")
    s.set_defaults(func=cmd_oracle_verify)

    s = sub.add_parser("oracle-sweep", help="brute-force check of every small graph")
    s.add_argument("--edges", type=int, default=4)
    s.add_argument("--mult", type=int, default=2)
    s.add_argument("--max-len", type=int, default=10)
    s.add_argument("--predicates", action="store_true", help="also check the location predicates")
    s.add_argument("--full", action="store_true", help="also check meshes and engine agreement on every node")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_oracle_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (GraphError, StringError, ar.LocationError, WalkError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
