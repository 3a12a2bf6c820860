"""Constructions used by the proofs: pattern graphs, regular bipartite
completion, 1-factorizations, star-free colorings, high-girth regular
graphs, bipartite double covers and seeded random colorings.

All randomness comes from ``numpy.random.default_rng(seed)`` (PCG64) with an
explicit integer seed; nothing touches global random state.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import EdgeColoring, Graph, check_bipartition, girth, parse_graph, serialize_graph
from .targets import PatternSpec


class ConstructionError(RuntimeError):
    """A randomized construction ran out of its retry budget."""


def make_pattern_graph(spec: PatternSpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind == "star":
        n = p[0]
        return Graph.with_prefix_sides(n + 1, [(0, i) for i in range(1, n + 1)], 1)
    if kind == "path":
        n = p[0]
        return Graph(n, tuple((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        n = p[0]
        if n < 3:
            raise ValueError("cycle length must be at least 3")
        return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
    if kind == "complete_bipartite":
        m, n = p
        return Graph.with_prefix_sides(
            m + n, [(a, m + b) for a in range(m) for b in range(n)], m
        )
    return spec.graph


# ---------------------------------------------------------------- regular completion

@dataclass(frozen=True)
class SupergraphWitness:
    supergraph: Graph
    inclusion: tuple  # original edge index -> supergraph edge index
    vertex_map: tuple  # original vertex -> supergraph vertex


def bipartite_edge_coloring(h: Graph, colors: int, sides=None) -> list[int]:
    """Proper edge coloring of a bipartite multigraph with ``colors >= Δ``
    colors (König).  Conflicts are resolved by swapping an alternating path."""
    if sides is None:
        sides = check_bipartition(h)
    if sides is None:
        raise ValueError("graph is not bipartite")
    if h.max_degree() > colors:
        raise ValueError(f"max degree {h.max_degree()} exceeds {colors} colors")
    at = [dict() for _ in range(h.vertex_count)]  # vertex -> {color: edge}
    color = [-1] * h.edge_count

    def other(e, x):
        u, v = h.edges[e]
        return v if x == u else u

    for e, (u, v) in enumerate(h.edges):
        a = next(c for c in range(colors) if c not in at[u])
        b = next(c for c in range(colors) if c not in at[v])
        if a in at[v]:
            # a/b alternating path from v; bipartiteness keeps it away from u
            path = []
            x, c = v, a
            while c in at[x]:
                f = at[x][c]
                path.append(f)
                x = other(f, x)
                c = b if c == a else a
            for f in path:
                fu, fv = h.edges[f]
                del at[fu][color[f]]
                del at[fv][color[f]]
            for f in path:
                color[f] = b if color[f] == a else a
                fu, fv = h.edges[f]
                at[fu][color[f]] = f
                at[fv][color[f]] = f
        color[e] = a
        at[u][a] = e
        at[v][a] = e
    return color


def regular_bipartite_supergraph(h: Graph, d: int) -> SupergraphWitness:
    """Embed a bipartite graph of max degree <= d in a d-regular bipartite
    multigraph.

    Edge-color ``h`` with ``d`` colors, pad both sides with isolated vertices
    to a common size, then complete every color class to a perfect matching.
    Side A of ``h`` becomes ``0..k-1`` in the supergraph (padding included),
    side B ``k..2k-1``; original edges keep their indices.
    """
    sides = check_bipartition(h)
    if sides is None:
        raise ValueError("graph is not bipartite")
    if h.max_degree() > d:
        raise ValueError(f"max degree {h.max_degree()} exceeds target degree {d}")
    side_a, side_b = sorted(sides[0]), sorted(sides[1])
    k = max(len(side_a), len(side_b))
    vmap = [0] * h.vertex_count
    for i, v in enumerate(side_a):
        vmap[v] = i
    for j, v in enumerate(side_b):
        vmap[v] = k + j
    color = bipartite_edge_coloring(h, d, sides)
    edges = [(vmap[u], vmap[v]) for u, v in h.edges]
    covered = [(set(), set()) for _ in range(d)]
    for (u, v), c in zip(edges, color):
        a, b = (u, v) if u < k else (v, u)
        covered[c][0].add(a)
        covered[c][1].add(b)
    for c in range(d):
        free_a = [x for x in range(k) if x not in covered[c][0]]
        free_b = [x for x in range(k, 2 * k) if x not in covered[c][1]]
        edges.extend(zip(free_a, free_b))
    sup = Graph.with_prefix_sides(2 * k, edges, k)
    return SupergraphWitness(sup, tuple(range(h.edge_count)), tuple(vmap))


# ---------------------------------------------------------------- 1-factorization

@dataclass(frozen=True)
class Factorization:
    factors: tuple  # tuple of sorted edge-index tuples


def _perfect_matching(k: int, ends: dict, alive: set) -> list[int]:
    """Perfect matching of a bipartite multigraph with sides 0..k-1 | k..2k-1,
    as a list of edge indices.  BFS augmenting paths (Kuhn)."""
    adj = [[] for _ in range(k)]
    for e in sorted(alive):
        u, v = ends[e]
        adj[u].append((v, e))
    match_right = {}  # right vertex -> edge
    match_left = {}
    for start in range(k):
        parent = {}  # right vertex -> (left vertex, edge)
        queue = deque([start])
        seen_left = {start}
        found = None
        while queue and found is None:
            x = queue.popleft()
            for y, e in adj[x]:
                if y in parent:
                    continue
                parent[y] = (x, e)
                if y not in match_right:
                    found = y
                    break
                nxt = ends[match_right[y]][0]
                if nxt not in seen_left:
                    seen_left.add(nxt)
                    queue.append(nxt)
        if found is None:
            raise RuntimeError("no perfect matching in a regular bipartite graph (internal error)")
        y = found
        while True:
            x, e = parent[y]
            prev = match_left.get(x)
            match_left[x] = e
            match_right[y] = e
            if x == start:
                break
            y = ends[prev][1]
    return sorted(match_left.values())


def one_factorization(h: Graph) -> Factorization:
    """Split a d-regular bipartite multigraph into d perfect matchings by
    repeatedly extracting a perfect matching and deleting it."""
    sides = check_bipartition(h)
    if sides is None:
        raise ValueError("graph is not bipartite")
    side_a, side_b = sorted(sides[0]), sorted(sides[1])
    if len(side_a) != len(side_b):
        raise ValueError("sides have unequal sizes")
    deg = h.degrees()
    d = deg[0] if deg else 0
    if any(x != d for x in deg):
        raise ValueError("graph is not regular")
    k = len(side_a)
    pos = {v: i for i, v in enumerate(side_a)}
    pos.update({v: k + j for j, v in enumerate(side_b)})
    ends = {}
    for e, (u, v) in enumerate(h.edges):
        a, b = pos[u], pos[v]
        ends[e] = (a, b) if a < k else (b, a)
    alive = set(range(h.edge_count))
    factors = []
    for _ in range(d):
        m = _perfect_matching(k, ends, alive)
        factors.append(tuple(m))
        alive.difference_update(m)
    return Factorization(tuple(factors))


def star_free_coloring(h: Graph, s: int, n: int) -> EdgeColoring:
    """Color a bipartite graph with ``s`` colors so that no vertex meets more
    than ``n - 1`` edges of one color (no monochromatic K_{1,n}).

    Requires max degree <= s(n-1).  Completes ``h`` to an s(n-1)-regular
    supergraph, 1-factorizes it, gives factors ``c(n-1) .. (c+1)(n-1)-1``
    color ``c`` and reads the colors back through the inclusion map.
    """
    d = s * (n - 1)
    if h.max_degree() > d:
        raise ValueError(
            f"max degree {h.max_degree()} exceeds s(n-1) = {d}; every {s}-coloring has a monochromatic S{n}"
        )
    if h.edge_count == 0:
        return EdgeColoring(s, ())
    wit = regular_bipartite_supergraph(h, d)
    fact = one_factorization(wit.supergraph)
    color_of = {}
    for i, factor in enumerate(fact.factors):
        for e in factor:
            color_of[e] = i // (n - 1)
    return EdgeColoring(s, tuple(color_of[wit.inclusion[e]] for e in range(h.edge_count)))


# ---------------------------------------------------------------- high girth

def _ball_size(d: int, r: int) -> int:
    return 1 + d * sum((d - 1) ** i for i in range(r))


class _Repairer:
    """Mutable multigraph (loops and parallel edges allowed) on which short
    cycles are destroyed by 2-edge swaps that never create new short cycles."""

    def __init__(self, n, pairs, g, rng):
        self.g = g
        self.rng = rng
        self.ends = [list(p) for p in pairs]
        self.inc = [set() for _ in range(n)]
        for e, (u, v) in enumerate(self.ends):
            self.inc[u].add(e)
            self.inc[v].add(e)

    def _other(self, e, x):
        u, v = self.ends[e]
        return v if x == u else u

    def short_cycle_edge(self, root):
        """An edge lying on a cycle of length < g through ``root``, or None."""
        g = self.g
        dist = {root: 0}
        via = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if dist[x] > (g - 2) // 2:
                break
            for e in self.inc[x]:
                if e == via[x]:
                    continue
                y = self._other(e, x)
                if y in dist:
                    if dist[x] + dist[y] + 1 < g:
                        return e
                else:
                    dist[y] = dist[x] + 1
                    via[y] = e
                    queue.append(y)
        return None

    def _closes_short_cycle(self, e):
        # a cycle of length < g through e exists iff its ends are within g-2 without e
        src, dst = self.ends[e]
        if src == dst:
            return True
        limit = self.g - 2
        dist = {src: 0}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            if dist[x] >= limit:
                continue
            for f in self.inc[x]:
                if f == e:
                    continue
                y = self._other(f, x)
                if y == dst:
                    return True
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return False

    def _set(self, e, u, v):
        a, b = self.ends[e]
        self.inc[a].discard(e)
        self.inc[b].discard(e)
        self.ends[e] = [u, v]
        self.inc[u].add(e)
        self.inc[v].add(e)

    def repair(self, e, tries):
        x, y = self.ends[e]
        m = len(self.ends)
        for _ in range(tries):
            f = int(self.rng.integers(m))
            if f == e:
                continue
            a, b = self.ends[f]
            if self.rng.integers(2):
                a, b = b, a
            if x == a or y == b:
                continue
            self._set(e, x, a)
            self._set(f, y, b)
            if self._closes_short_cycle(e) or self._closes_short_cycle(f):
                self._set(e, x, y)
                self._set(f, a, b)
                continue
            return True
        return False


def high_girth_regular(
    d: int,
    g: int,
    seed: int,
    vertex_count: Optional[int] = None,
    doublings: int = 4,
    swap_tries: int = 500,
) -> Graph:
    """Simple d-regular graph with girth >= g.

    Pairing-model random multigraph on N vertices, then every cycle shorter
    than ``g`` (loops and parallel edges included) is broken by a random
    2-edge swap accepted only if it creates no short cycle, so one pass over
    the vertices suffices.  N starts at ``vertex_count`` or twice the size of
    a radius-(g-2) Moore ball and doubles when a swap cannot be found.
    Deterministic per ``seed``; the result is re-checked before returning.
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    g = max(g, 3)
    n = vertex_count or max(2 * _ball_size(d, g - 2), 2 * (d + 1))
    for attempt in range(doublings + 1):
        if (n * d) % 2:
            n += 1
        rng = np.random.default_rng([seed, attempt])
        stubs = np.repeat(np.arange(n), d)
        rng.shuffle(stubs)
        pairs = stubs.reshape(-1, 2).tolist()
        rep = _Repairer(n, pairs, g, rng)
        ok = True
        for root in range(n):
            while ok:
                e = rep.short_cycle_edge(root)
                if e is None:
                    break
                ok = rep.repair(e, swap_tries)
            if not ok:
                break
        if ok:
            out = Graph(n, tuple(tuple(p) for p in rep.ends))
            if (
                len(set(out.edges)) == out.edge_count
                and all(x == d for x in out.degrees())
                and girth(out, stop_below=g) >= g
            ):
                return out
        n *= 2
    raise ConstructionError(f"no {d}-regular graph of girth >= {g} found within budget (seed {seed})")


def bipartite_double_cover(g: Graph) -> Graph:
    """Direct product with K_2: vertex ``v`` on layer ``t`` is ``v + t*|V|``.
    Each edge uv yields (u,0)-(v,1) and (u,1)-(v,0); layer 0 is side A."""
    if len(set(g.edges)) != g.edge_count:
        raise ValueError("double cover expects a simple graph")
    n = g.vertex_count
    edges = []
    for u, v in g.edges:
        edges.append((u, n + v))
        edges.append((n + u, v))
    return Graph.with_prefix_sides(2 * n, edges, n)


# ---------------------------------------------------------------- random objects

def random_coloring(h: Graph, s: int, seed) -> EdgeColoring:
    """Independent uniform color per edge."""
    if s < 1:
        raise ValueError("need at least one color")
    rng = np.random.default_rng(seed)
    return EdgeColoring(s, tuple(rng.integers(0, s, size=h.edge_count).tolist()))


def random_graph(n: int, p: float, seed) -> Graph:
    """Erdős–Rényi G(n, p), edges in lexicographic order."""
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, tuple(edges))


def random_bipartite_graph(a: int, b: int, p: float, seed, max_degree: Optional[int] = None) -> Graph:
    """Random simple bipartite graph with sides ``0..a-1`` | ``a..a+b-1``;
    candidate edges are dropped if they would push a degree past ``max_degree``."""
    rng = np.random.default_rng(seed)
    deg = [0] * (a + b)
    edges = []
    for u in range(a):
        for v in range(a, a + b):
            if rng.random() >= p:
                continue
            if max_degree is not None and (deg[u] >= max_degree or deg[v] >= max_degree):
                continue
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
    return Graph.with_prefix_sides(a + b, edges, a)


def random_regular_bipartite_multigraph(k: int, d: int, seed) -> Graph:
    """Union of ``d`` uniformly random perfect matchings between two sides of size ``k``."""
    rng = np.random.default_rng(seed)
    edges = []
    for _ in range(d):
        perm = rng.permutation(k)
        edges.extend((i, k + int(perm[i])) for i in range(k))
    return Graph.with_prefix_sides(2 * k, edges, k)


# ---------------------------------------------------------------- sidecar formats

def serialize_factorization(f: Factorization) -> str:
    return "".join(f"f {i} {e}\n" for i, factor in enumerate(f.factors) for e in factor)


def parse_factorization(text: str) -> Factorization:
    groups: dict = {}
    for raw in text.splitlines():
        toks = raw.split()
        if not toks or toks[0].startswith("#"):
            continue
        if toks[0] != "f" or len(toks) != 3:
            raise ValueError(f"bad factorization line {raw!r}")
        groups.setdefault(int(toks[1]), []).append(int(toks[2]))
    return Factorization(tuple(tuple(sorted(groups[i])) for i in sorted(groups)))


def serialize_supergraph(w: SupergraphWitness) -> str:
    lines = [serialize_graph(w.supergraph).rstrip("\n")]
    lines.extend(f"inc {i} {j}" for i, j in enumerate(w.inclusion))
    lines.extend(f"vmap {i} {j}" for i, j in enumerate(w.vertex_map))
    return "\n".join(lines) + "\n"


def parse_supergraph(text: str) -> SupergraphWitness:
    extra = {"inc": [], "vmap": []}
    g = parse_graph(text, extra)
    inc = dict(extra["inc"])
    vmap = dict(extra["vmap"])
    return SupergraphWitness(
        g,
        tuple(inc[i] for i in range(len(inc))),
        tuple(vmap[i] for i in range(len(vmap))),
    )
