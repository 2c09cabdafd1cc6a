import pytest

from fusioncat import pipeline as pl


@pytest.fixture(scope="session")
def base_data():
    return pl.base_data()


@pytest.fixture(scope="session")
def ring():
    return pl.ring()


@pytest.fixture(scope="session")
def invariant():
    return pl.invariant()


@pytest.fixture(scope="session")
def family():
    return pl.family()


@pytest.fixture(scope="session")
def chiral_lift():
    return pl.chiral_lift()


@pytest.fixture(scope="session")
def parity():
    return pl.parity()


@pytest.fixture(scope="session")
def module_graph():
    return pl.module_graph()


@pytest.fixture(scope="session")
def annular():
    return pl.annular()


@pytest.fixture(scope="session")
def graph_algebra():
    return pl.graph_algebra()


@pytest.fixture(scope="session")
def quantum_symmetries():
    return pl.quantum_symmetries()


@pytest.fixture(scope="session")
def dual_matrices():
    return pl.dual_matrices()


@pytest.fixture(scope="session")
def slot_map():
    return pl.slot_map()
