from __future__ import annotations

import json
from pathlib import Path

import networkx as nx
import pytest

from pcfcolor.graph import Embedding, Graph
from pcfcolor.io import graph_from_json

FIXTURES = Path(__file__).parent / "fixtures"

# lines recorded by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_embedding(n: int) -> Embedding:
    return Embedding.from_lists([[(i - 1) % n, (i + 1) % n] for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def load_fixture(name: str):
    return graph_from_json(json.loads((FIXTURES / name).read_text()))


@pytest.fixture
def c5() -> Graph:
    return cycle(5)
