import pytest

from partgraph.morphology import analyze


@pytest.fixture(scope="session")
def analyses():
    """Full analyses for the atlas range, built once per test session."""
    return {n: analyze(n) for n in range(1, 13)}


@pytest.fixture(scope="session")
def graphs(analyses):
    return {n: a.graph for n, a in analyses.items()}
