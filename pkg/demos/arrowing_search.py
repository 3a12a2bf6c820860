"""Deciding H -> (G)_s exactly.

The backtracking search colors one edge at a time and only looks for a
monochromatic copy through the edge it just colored.  A brute-force oracle
that lists all copies and scans every coloring gives the same answers on
small hosts.  Negative answers come with a coloring that anyone can check.
"""
from degree_ramsey import Graph, PatternSpec, brute_force_arrowing, decide_arrowing, verify_coloring
from degree_ramsey.arrowing import SearchBudget
from degree_ramsey.graph import serialize_coloring


def complete(n):
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


triangle = PatternSpec.cycle(3)
for n in (5, 6):
    v = decide_arrowing(complete(n), triangle, 2)
    print(f"K_{n} -> (K_3)_2: {v.outcome.value}, {v.nodes_explored} nodes, {v.seconds:.3f}s")
    if v.certificate is not None:
        print("  witness coloring is triangle-free in both colors:",
              verify_coloring(complete(n), v.certificate, triangle))

# The oracle agrees on a host small enough to enumerate (2^10 colorings).
oracle = brute_force_arrowing(complete(5), triangle, 2)
print(f"oracle on K_5: {oracle.outcome.value} after {oracle.nodes_explored} colorings")

# Certificates are plain text: one "c <edge> <color>" line per edge.
path = Graph(4, ((0, 1), (1, 2), (2, 3)))
v = decide_arrowing(path, PatternSpec.star(2), 2)
print("\nP_4 with 2 colors, avoiding a monochromatic P_3:")
print(serialize_coloring(v.certificate), end="")

# A budget turns a long search into an explicit "unknown".
v = decide_arrowing(complete(6), triangle, 2, SearchBudget(max_nodes=50))
print(f"\nwith a 50-node budget: {v.outcome.value} (exit code {v.exit_code})")
