import networkx as nx
import pytest

from multipacking.graph import Graph


def tree_catalog(n_max: int) -> list[Graph]:
    """All non-isomorphic free trees with 1 <= n <= n_max."""
    trees = [Graph.from_edges(1, [])]
    for n in range(2, n_max + 1):
        trees += [
            Graph.from_edges(n, list(T.edges()))
            for T in nx.nonisomorphic_trees(n)
        ]
    return trees


@pytest.fixture(scope="session")
def trees_up_to_9() -> list[Graph]:
    return tree_catalog(9)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
