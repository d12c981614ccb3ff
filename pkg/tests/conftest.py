import json
from pathlib import Path

import networkx as nx
import pytest

from maxac.graph import Graph, from_edge_list

DATA = Path(__file__).parent / "data"


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def from_nx(G: nx.Graph) -> Graph:
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return from_edge_list(G.number_of_nodes(), G.edges())


def random_regular(d: int, n: int, seed: int) -> Graph:
    return from_nx(nx.random_regular_graph(d, n, seed=seed))


@pytest.fixture(scope="session")
def table1():
    return json.loads((DATA / "table1.json").read_text())


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
