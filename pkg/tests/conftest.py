"""Independent oracles shared by the test modules.

None of these call into the search code they are used to check.
"""
from itertools import combinations, product

import networkx as nx
import numpy as np
import pytest
from networkx.algorithms import isomorphism

from degree_ramsey.graph import Graph


def to_nx(g: Graph) -> nx.MultiGraph:
    out = nx.MultiGraph()
    out.add_nodes_from(range(g.vertex_count))
    out.add_edges_from(g.edges)
    return out


def to_simple_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.vertex_count))
    out.add_edges_from(g.edges)
    return out


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    """Non-induced subgraph containment via networkx monomorphism search."""
    if pattern.vertex_count > host.vertex_count:
        return False
    gm = isomorphism.GraphMatcher(to_simple_nx(host), to_simple_nx(pattern))
    return gm.subgraph_is_monomorphic()


def class_graph(h: Graph, assignment, c: int) -> Graph:
    return Graph(h.vertex_count, tuple(e for e, k in zip(h.edges, assignment) if k == c))


def brute_arrows(h: Graph, pattern: Graph, s: int) -> bool:
    """Every s-coloring has a monochromatic copy (plain enumeration)."""
    for assignment in product(range(s), repeat=h.edge_count):
        if not any(contains_subgraph(class_graph(h, assignment, c), pattern) for c in range(s)):
            return False
    return True


def brute_kmn(g: Graph, side_a, side_b, m: int, n: int) -> bool:
    adj = g.neighbor_sets()
    for left in combinations(sorted(side_a), m):
        common = [b for b in side_b if all(b in adj[a] for a in left)]
        if len(common) >= n:
            return True
    return False


def random_small_graph(rng: np.random.Generator, max_vertices: int, max_edges: int, multi=False) -> Graph:
    n = int(rng.integers(2, max_vertices + 1))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    k = int(rng.integers(1, min(max_edges, len(pairs) if not multi else max_edges) + 1))
    if multi:
        idx = rng.integers(0, len(pairs), size=k)
    else:
        idx = rng.choice(len(pairs), size=min(k, len(pairs)), replace=False)
    return Graph(n, tuple(pairs[i] for i in idx))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
