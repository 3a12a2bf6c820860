"""The star K_{1,n} and s colors.

A vertex of degree s(n-1)+1 always sees n edges of one color, so the star
K_{1,s(n-1)+1} arrows K_{1,n}.  In the other direction, any bipartite graph
of maximum degree s(n-1) can be colored with no monochromatic K_{1,n}: pad it
to an s(n-1)-regular bipartite multigraph, split that into perfect
matchings, and give each color n-1 of them.
"""
from degree_ramsey import (
    PatternSpec,
    decide_arrowing,
    make_pattern_graph,
    one_factorization,
    regular_bipartite_supergraph,
    star_free_coloring,
    verify_coloring,
)
from degree_ramsey.construct import random_bipartite_graph

s, n = 3, 3
d = s * (n - 1)
target = PatternSpec.star(n)

# Upper direction: the search exhausts every coloring of the big star.
for size in (d, d + 1):
    verdict = decide_arrowing(make_pattern_graph(PatternSpec.star(size)), target, s)
    print(f"K_1,{size} with {s} colors -> S{n}? {verdict.outcome.value} ({verdict.nodes_explored} nodes)")

# Lower direction, step by step on a random bipartite host.
h = random_bipartite_graph(7, 8, 0.7, seed=11, max_degree=d)
print(f"\nhost: {h.vertex_count} vertices, {h.edge_count} edges, max degree {h.max_degree()}")

witness = regular_bipartite_supergraph(h, d)
sup = witness.supergraph
print(f"regular supergraph: {sup.vertex_count} vertices, all degrees {sorted(set(sup.degrees()))}")

factors = one_factorization(sup).factors
print(f"perfect matchings: {len(factors)}, sizes {[len(f) for f in factors]}")

col = star_free_coloring(h, s, n)
print(f"coloring avoids a monochromatic S{n}: {verify_coloring(h, col, target)}")
