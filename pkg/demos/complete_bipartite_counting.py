"""Counting arguments for K_{m,n}.

A bipartite graph with sides of size M and N in which every vertex on the
N side has p neighbours contains K_{m,n} as soon as N*C(p,m) > (n-1)*C(M,m):
some m-set is shared by n neighbourhoods.  The finder below lets each
vertex vote for the m-subsets of its neighbourhood.
"""
from degree_ramsey import kst_find, kst_threshold
from degree_ramsey.pipelines import random_kst_subgraph

M, N, p, m, n = 4, 7, 2, 2, 2
print(f"threshold N*C(p,m) > (n-1)*C(M,m): {kst_threshold(M, N, p, m, n)}")
print(f"one vertex fewer on the N side: {kst_threshold(M, N - 1, p, m, n)}")

for seed in range(5):
    g = random_kst_subgraph(M, N, N * p, seed)
    cert = kst_find(g, m, n)
    print(f"sample {seed}: K_{m},{n} on {cert.left_set} x {cert.right_set}")
