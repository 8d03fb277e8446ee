import sys
from pathlib import Path

import pytest

from visipoly import Graph, parse_graph6

DATA = Path(__file__).parent / "data"
sys.path.insert(0, str(Path(__file__).parent))


def paper(*labels):
    """Translate the paper's 1-based vertex labels to 0-based indices."""
    return frozenset(v - 1 for v in labels)


def paper_graph(n, edges):
    return Graph.from_edges(n, [(a - 1, b - 1) for a, b in edges])


def load_corpus(order):
    lines = (DATA / f"connected{order}.g6").read_text().split()
    return [parse_graph6(line) for line in lines]


# C5 on 1..5 with a pendant vertex 6 at 1
FIG3 = paper_graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6)])
G1 = paper_graph(5, [(2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (3, 5)])
G2 = paper_graph(5, [(2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (3, 5), (1, 4)])
G3 = paper_graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (3, 5)])


@pytest.fixture(scope="session")
def small_connected():
    """Every connected graph of order 2..6, one per isomorphism class."""
    return [g for n in range(2, 7) for g in load_corpus(n)]


@pytest.fixture(scope="session")
def tiny_connected():
    return [g for n in range(2, 6) for g in load_corpus(n)]
