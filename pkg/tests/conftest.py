import pytest
from hypothesis import HealthCheck, settings

from brauer_ar import StringEngine, load_fixture
from brauer_ar.fixtures import NAMES

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def graphs():
    return {n: load_fixture(n) for n in NAMES}


@pytest.fixture(scope="session")
def engines(graphs):
    return {n: StringEngine(g) for n, g in graphs.items()}


@pytest.fixture(scope="session")
def g1(graphs):
    return graphs["G1"]


@pytest.fixture(scope="session")
def g2(graphs):
    return graphs["G2"]


@pytest.fixture(scope="session")
def g3(graphs):
    return graphs["G3"]


@pytest.fixture(scope="session")
def g4(graphs):
    return graphs["G4"]
