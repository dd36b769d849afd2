"""Example graphs shipped with the package."""

from importlib import resources

from .graph import BrauerGraph, parse_graph

NAMES = ("G1", "G2", "G3", "G4")


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath("fixtures", f"{name}.bg").read_text(encoding="utf-8")


def load_fixture(name: str) -> BrauerGraph:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    return parse_graph(fixture_text(name))
