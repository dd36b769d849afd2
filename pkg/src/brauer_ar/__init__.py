"""Stable Auslander-Reiten components of Brauer graph algebras from the graph alone."""

from .graph import BrauerGraph, EdgeClass, GraphError, HalfEdge, classify_edges, load_graph, parse_graph
from .quiver import Arrow, Quiver, Relation, RelationKind, build_quiver
from .strings import Letter, MouthString, StringEngine, StringError, StringWord, parse_string
from .fixtures import load_fixture

__version__ = "0.1.0"
