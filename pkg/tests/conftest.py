from pathlib import Path

import pytest

from app.config import reset_limits
from app.graph_core import complete_bipartite, complete_graph, cycle_graph, empty_graph, path_graph

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def fresh_limits():
    reset_limits()
    yield
    reset_limits()


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k22():
    return complete_bipartite(2, 2)


@pytest.fixture
def k13():
    return complete_bipartite(1, 3)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def empty3():
    return empty_graph(3)
