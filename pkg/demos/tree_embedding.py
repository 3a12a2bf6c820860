"""Finding a monochromatic tree in a regular bipartite host of large girth.

For a tree T with maximum degree r, take a 2s(r-1)-regular graph of girth
larger than |V(T)| and its bipartite double cover.  Under any s-coloring the
largest color class has average degree at least 2(r-1); deleting vertices of
degree at most the current edge/vertex ratio leaves a core of minimum degree
at least r, and in a graph of large girth a tree can then be grown greedily.
"""
from degree_ramsey import (
    PatternSpec,
    bipartite_double_cover,
    embed_tree,
    girth,
    high_girth_regular,
    majority_color_class,
    make_pattern_graph,
    peel_dense_core,
    random_coloring,
)

s = 2
tree = make_pattern_graph(PatternSpec.path_graph(5))
r = tree.max_degree()
d = 2 * s * (r - 1)

base = high_girth_regular(d, tree.vertex_count + 1, seed=1)
host = bipartite_double_cover(base)
print(f"base: {base.vertex_count} vertices, {d}-regular, girth {girth(base)}")
print(f"double cover: {host.vertex_count} vertices, girth {girth(host)}")

for seed in range(5):
    col = random_coloring(host, s, seed)
    c, cls = majority_color_class(host, col)
    peel = peel_dense_core(cls)
    emb = embed_tree(peel.core, tree)
    path = [peel.kept[x] for x in emb.map] if emb else None
    print(f"coloring {seed}: color {c} has {cls.edge_count} edges, "
          f"core min degree {peel.core_stats.min_degree}, path {path}")
