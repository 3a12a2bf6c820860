from collections import Counter

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_simple_nx
from degree_ramsey.arrowing import verify_coloring
from degree_ramsey.construct import (
    bipartite_edge_coloring,
    bipartite_double_cover,
    high_girth_regular,
    make_pattern_graph,
    one_factorization,
    parse_factorization,
    parse_supergraph,
    random_bipartite_graph,
    random_coloring,
    random_regular_bipartite_multigraph,
    regular_bipartite_supergraph,
    serialize_factorization,
    serialize_supergraph,
    star_free_coloring,
)
from degree_ramsey.graph import Graph, check_bipartition, girth
from degree_ramsey.targets import PatternSpec


def cycle(n):
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def assert_factorization(h, fact):
    """Each factor a perfect matching; factors partition the edges."""
    d = h.degrees()[0]
    assert len(fact.factors) == d
    all_edges = sorted(e for f in fact.factors for e in f)
    assert all_edges == list(range(h.edge_count))
    for f in fact.factors:
        touched = Counter(x for e in f for x in h.edges[e])
        assert len(f) == h.vertex_count // 2
        assert set(touched.values()) == {1} and len(touched) == h.vertex_count


def assert_supergraph(h, wit, d):
    sup = wit.supergraph
    assert set(sup.degrees()) == {d}
    a, b = sup.bipartition
    assert len(a) == len(b)
    for e, (u, v) in enumerate(h.edges):
        image = sup.edges[wit.inclusion[e]]
        assert image == tuple(sorted((wit.vertex_map[u], wit.vertex_map[v])))
    assert len(set(wit.inclusion)) == h.edge_count
    assert len(set(wit.vertex_map)) == h.vertex_count


class TestSupergraph:
    def test_path_in_two_regular(self):
        p3 = Graph(3, ((0, 1), (1, 2)))
        wit = regular_bipartite_supergraph(p3, 2)
        assert wit.supergraph.vertex_count == 4
        assert_supergraph(p3, wit, 2)

    def test_regular_input_is_unchanged(self):
        h = make_pattern_graph(PatternSpec.complete_bipartite(3, 3))
        wit = regular_bipartite_supergraph(h, 3)
        assert wit.supergraph == h
        assert wit.inclusion == tuple(range(9))
        assert wit.vertex_map == tuple(range(6))

    def test_star(self):
        h = make_pattern_graph(PatternSpec.star(4))
        wit = regular_bipartite_supergraph(h, 4)
        assert wit.supergraph.vertex_count <= 10
        assert_supergraph(h, wit, 4)

    def test_degree_too_large(self):
        with pytest.raises(ValueError):
            regular_bipartite_supergraph(make_pattern_graph(PatternSpec.star(4)), 3)

    def test_not_bipartite(self):
        with pytest.raises(ValueError):
            regular_bipartite_supergraph(cycle(5), 3)

    @settings(max_examples=60)
    @given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 5), st.integers(0, 10**6))
    def test_random_inputs(self, a, b, d, seed):
        h = random_bipartite_graph(a, b, 0.6, seed, max_degree=d)
        wit = regular_bipartite_supergraph(h, d)
        assert_supergraph(h, wit, d)

    def test_text_round_trip(self):
        h = make_pattern_graph(PatternSpec.star(3))
        wit = regular_bipartite_supergraph(h, 3)
        assert parse_supergraph(serialize_supergraph(wit)) == wit


class TestEdgeColoring:
    @settings(max_examples=60)
    @given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10**6))
    def test_proper_with_max_degree_colors(self, a, b, seed):
        h = random_bipartite_graph(a, b, 0.7, seed)
        d = max(h.max_degree(), 1)
        color = bipartite_edge_coloring(h, d)
        seen = set()
        for (u, v), c in zip(h.edges, color):
            assert 0 <= c < d
            assert (u, c) not in seen and (v, c) not in seen
            seen.update({(u, c), (v, c)})


class TestFactorization:
    def test_c6(self):
        fact = one_factorization(cycle(6))
        assert [len(f) for f in fact.factors] == [3, 3]
        assert_factorization(cycle(6), fact)

    def test_k33(self):
        h = make_pattern_graph(PatternSpec.complete_bipartite(3, 3))
        fact = one_factorization(h)
        assert len(fact.factors) == 3
        assert_factorization(h, fact)

    def test_parallel_pair(self):
        h = Graph.with_prefix_sides(2, [(0, 1), (0, 1)], 1)
        fact = one_factorization(h)
        assert sorted(fact.factors) == [(0,), (1,)]

    def test_rejects_irregular(self):
        with pytest.raises(ValueError):
            one_factorization(Graph(3, ((0, 1), (1, 2))))

    def test_text_round_trip(self):
        fact = one_factorization(cycle(8))
        assert parse_factorization(serialize_factorization(fact)) == fact

    @settings(max_examples=50)
    @given(st.integers(1, 12), st.integers(1, 6), st.integers(0, 10**6))
    def test_random_multigraphs(self, k, d, seed):
        h = random_regular_bipartite_multigraph(k, d, seed)
        assert_factorization(h, one_factorization(h))


class TestStarFree:
    def test_star_two_per_color(self):
        h = make_pattern_graph(PatternSpec.star(4))
        col = star_free_coloring(h, 2, 3)
        assert sorted(Counter(col.assignment).values()) == [2, 2]
        assert verify_coloring(h, col, PatternSpec.star(3))

    def test_single_edge(self):
        h = Graph.with_prefix_sides(2, [(0, 1)], 1)
        for s in (1, 2, 4):
            col = star_free_coloring(h, s, 2)
            assert verify_coloring(h, col, PatternSpec.star(2))

    def test_c8_proper(self):
        h = cycle(8)
        col = star_free_coloring(h, 2, 2)
        assert verify_coloring(h, col, PatternSpec.star(2))

    def test_degree_too_high(self):
        with pytest.raises(ValueError):
            star_free_coloring(make_pattern_graph(PatternSpec.star(5)), 2, 3)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 3), st.integers(2, 4), st.integers(0, 10**6))
    def test_random_hosts(self, s, n, seed):
        h = random_bipartite_graph(6, 7, 0.8, seed, max_degree=s * (n - 1))
        col = star_free_coloring(h, s, n)
        per_vertex = Counter()
        for (u, v), c in zip(h.edges, col.assignment):
            per_vertex[(u, c)] += 1
            per_vertex[(v, c)] += 1
        assert max(per_vertex.values(), default=0) <= n - 1


class TestHighGirth:
    def test_cycles(self):
        g = high_girth_regular(2, 7, seed=1)
        assert set(g.degrees()) == {2}
        assert girth(g) >= 7

    def test_cubic_girth_five(self):
        g = high_girth_regular(3, 5, seed=3)
        assert g.vertex_count >= 10
        assert set(g.degrees()) == {3}
        assert girth(g) >= 5
        assert nx.girth(to_simple_nx(g)) >= 5

    def test_vacuous_target(self):
        g = high_girth_regular(3, 2, seed=0)
        assert set(g.degrees()) == {3}
        assert len(set(g.edges)) == g.edge_count

    def test_deterministic(self):
        assert high_girth_regular(4, 6, seed=11) == high_girth_regular(4, 6, seed=11)

    @pytest.mark.parametrize("d, g", [(3, 6), (4, 6), (5, 5)])
    def test_parameters(self, d, g):
        out = high_girth_regular(d, g, seed=5)
        assert set(out.degrees()) == {d}
        assert girth(out) >= g


class TestDoubleCover:
    def test_c5(self):
        h = bipartite_double_cover(cycle(5))
        nxg = to_simple_nx(h)
        assert h.vertex_count == 10 and nx.is_connected(nxg)
        assert set(h.degrees()) == {2}

    def test_k2(self):
        h = bipartite_double_cover(Graph(2, ((0, 1),)))
        assert sorted(h.edges) == [(0, 3), (1, 2)]

    def test_k4(self):
        k4 = Graph(4, tuple((u, v) for u in range(4) for v in range(u + 1, 4)))
        h = bipartite_double_cover(k4)
        assert h.vertex_count == 8 and set(h.degrees()) == {3}
        assert girth(h) == 4

    def test_rejects_multigraph(self):
        with pytest.raises(ValueError):
            bipartite_double_cover(Graph(2, ((0, 1), (0, 1))))

    @settings(max_examples=80)
    @given(st.integers(1, 9), st.data())
    def test_invariants(self, n, data):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        g = Graph(n, tuple(edges))
        h = bipartite_double_cover(g)
        assert check_bipartition(Graph(h.vertex_count, h.edges)) is not None
        assert h.degrees() == g.degrees() * 2
        assert girth(h) >= girth(g)


class TestRandomColoring:
    def test_one_color(self):
        col = random_coloring(cycle(6), 1, seed=9)
        assert col.assignment == (0,) * 6

    def test_deterministic(self):
        h = make_pattern_graph(PatternSpec.complete_bipartite(3, 4))
        assert random_coloring(h, 3, 42) == random_coloring(h, 3, 42)
        assert random_coloring(h, 3, 42) != random_coloring(h, 3, 43)

    def test_frequencies(self):
        h = make_pattern_graph(PatternSpec.star(3000))
        s = 3
        col = random_coloring(h, s, 7)
        counts = np.bincount(col.assignment, minlength=s)
        sigma = np.sqrt(h.edge_count * (1 / s) * (1 - 1 / s))
        assert np.all(np.abs(counts - h.edge_count / s) <= 3 * sigma)
