from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from graphstrength.graphs import Graph


def to_graph(nxg) -> Graph:
    """Convert a networkx graph with integer-convertible nodes (test-side only)."""
    nodes = sorted(nxg.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in nxg.edges()])


def atlas_connected(p_min: int, p_max: int) -> list[Graph]:
    """Every connected graph with p_min <= p <= p_max, via the small-graph atlas."""
    out = []
    for nxg in nx.graph_atlas_g():
        p = nxg.number_of_nodes()
        if p_min <= p <= p_max and p > 0 and nx.is_connected(nxg):
            out.append(to_graph(nxg))
    return out


def random_graph(rng: random.Random, p: int, density: float) -> Graph:
    edges = [(u, v) for u in range(p) for v in range(u + 1, p) if rng.random() < density]
    return Graph(p, edges)


def random_forest(rng: random.Random, p: int) -> Graph:
    """Random forest on p >= 2 vertices with no isolated vertices."""
    sizes = []
    left = p
    while left:
        if left <= 3:
            size = left
        else:
            size = rng.randint(2, left)
            if left - size == 1:  # never strand a single vertex
                size += 1
        sizes.append(size)
        left -= size
    edges = []
    base = 0
    for size in sizes:
        for v in range(base + 1, base + size):  # random attachment tree
            edges.append((v, rng.randint(base, v - 1)))
        base += size
    return Graph(p, edges)


def brute_strength(g: Graph) -> int:
    """Reference value by trying every numbering (tiny graphs only)."""
    assert g.n <= 8, "brute force is factorial"
    edges = g.edges()
    best = 10**9
    for perm in itertools.permutations(range(1, g.n + 1)):
        best = min(best, max(perm[u] + perm[v] for u, v in edges))
    return best


@pytest.fixture(scope="session")
def atlas_small() -> list[Graph]:
    return atlas_connected(3, 6)
