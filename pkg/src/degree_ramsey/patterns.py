"""Pattern search inside color classes, dense-core peeling, greedy tree
embedding, Kővári–Sós–Turán counting and locally injective homomorphisms."""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .construct import make_pattern_graph
from .graph import (
    DegreeStats,
    EdgeColoring,
    Embedding,
    Graph,
    check_bipartition,
    color_class,
    degree_stats,
    is_tree,
)
from .targets import PatternSpec


# ---------------------------------------------------------------- subgraph search

def _search_order(pattern_adj: list, starts: Sequence[int]) -> list[int]:
    """BFS order beginning with ``starts`` (exactly in that order), then
    covering the remaining components from their highest-degree vertex."""
    order, seen = [], set()
    roots = [list(starts)] + [[v] for v in sorted(range(len(pattern_adj)), key=lambda v: (-len(pattern_adj[v]), v))]
    for group in roots:
        group = [r for r in group if r not in seen]
        if not group:
            continue
        seen.update(group)
        queue = deque(group)
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(pattern_adj[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


class PatternMatcher:
    """Non-induced subgraph search for one fixed simple pattern.

    Host graphs are given as lists of neighbour sets, so a color class can be
    updated in place by the arrowing search and queried after every step.
    """

    def __init__(self, spec: PatternSpec):
        self.spec = spec
        self.graph = make_pattern_graph(spec)
        self.adj = self.graph.neighbor_sets()
        self.degree = [len(a) for a in self.adj]
        self.size = self.graph.vertex_count
        self._full_order = _search_order(self.adj, [])
        self._anchored = {}
        for a, b in self.graph.edges:
            for x, y in ((a, b), (b, a)):
                self._anchored[(x, y)] = _search_order(self.adj, [x, y])

    def _extend(self, order, host_adj, host_n, mapping, used, depth):
        if depth == len(order):
            return True
        w = order[depth]
        back = [p for p in self.adj[w] if p in mapping]
        if back:
            base = host_adj[mapping[back[0]]]
            cands = sorted(x for x in base if all(x in host_adj[mapping[p]] for p in back[1:]))
        else:
            cands = range(host_n)
        need = self.degree[w]
        for x in cands:
            if x in used or len(host_adj[x]) < need:
                continue
            mapping[w] = x
            used.add(x)
            if self._extend(order, host_adj, host_n, mapping, used, depth + 1):
                return True
            del mapping[w]
            used.discard(x)
        return False

    @staticmethod
    def _as_tuple(mapping, size):
        return tuple(mapping[i] for i in range(size))

    def find(self, host_adj: list, host_n: Optional[int] = None) -> Optional[tuple]:
        """Any embedding of the pattern into the host, or None."""
        host_n = len(host_adj) if host_n is None else host_n
        if self.size > host_n:
            return None
        kind, p = self.spec.kind, self.spec.params
        if kind == "star":
            return self._find_star(host_adj, p[0])
        if kind == "complete_bipartite":
            return self._find_kmn(host_adj, *p)
        mapping = {}
        if self._extend(self._full_order, host_adj, host_n, mapping, set(), 0):
            return self._as_tuple(mapping, self.size)
        return None

    def through_edge(self, host_adj: list, u: int, v: int) -> Optional[tuple]:
        """An embedding using host edge ``uv`` (which must be present), or None."""
        if self.size > len(host_adj):
            return None
        if self.spec.kind == "star":
            k = self.spec.params[0]
            for c in (u, v):
                if len(host_adj[c]) >= k:
                    # c's other neighbours complete the star; include the anchor edge first
                    o = v if c == u else u
                    rest = sorted(host_adj[c] - {o})[: k - 1]
                    return (c, o, *rest)
            return None
        for (a, b), order in self._anchored.items():
            if len(host_adj[u]) < self.degree[a] or len(host_adj[v]) < self.degree[b]:
                continue
            mapping = {a: u, b: v}
            if self._extend(order, host_adj, len(host_adj), mapping, {u, v}, 2):
                return self._as_tuple(mapping, self.size)
        return None

    def _find_star(self, host_adj, k):
        for c, nbrs in enumerate(host_adj):
            if len(nbrs) >= k:
                return (c, *sorted(nbrs)[:k])
        return None

    def _find_kmn(self, host_adj, m, n):
        # enumerate subsets for the smaller side, intersect neighbourhoods for the other
        small, large, small_first = (m, n, True) if m <= n else (n, m, False)
        cands = [x for x, nb in enumerate(host_adj) if len(nb) >= large]
        for subset in combinations(cands, small):
            common = set.intersection(*(host_adj[x] for x in subset)) - set(subset)
            if len(common) >= large:
                other = sorted(common)[:large]
                return tuple(subset) + tuple(other) if small_first else tuple(other) + tuple(subset)
        return None


def _class_adjacency(h: Graph, col: EdgeColoring, c: int) -> list[set]:
    adj = [set() for _ in range(h.vertex_count)]
    for (u, v), k in zip(h.edges, col.assignment):
        if k == c:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def find_monochromatic(h: Graph, col: EdgeColoring, pat: PatternSpec, matcher: Optional[PatternMatcher] = None):
    """``(color, Embedding)`` of a monochromatic copy of ``pat``, or None.

    Colors are tried in increasing order.  Stars use per-vertex color degrees,
    K_{m,n} common neighbourhoods, everything else backtracking search.
    """
    col.check_host(h)
    matcher = matcher or PatternMatcher(pat)
    if matcher.graph.edge_count == 0:
        if matcher.size <= h.vertex_count:
            return 0, Embedding(tuple(range(matcher.size)))
        return None
    for c in range(col.color_count):
        found = matcher.find(_class_adjacency(h, col, c), h.vertex_count)
        if found is not None:
            return c, Embedding(found)
    return None


def majority_color_class(h: Graph, col: EdgeColoring):
    """Largest color class (lowest color on ties); it has >= ceil(|E|/s) edges."""
    col.check_host(h)
    if h.edge_count == 0:
        raise ValueError("host has no edges")
    sizes = [0] * col.color_count
    for c in col.assignment:
        sizes[c] += 1
    best = max(range(col.color_count), key=lambda c: (sizes[c], -c))
    return best, color_class(h, col, best)


# ---------------------------------------------------------------- dense core

@dataclass(frozen=True)
class PeelResult:
    core: Graph
    removed: tuple  # deleted vertices, in deletion order (original labels)
    core_stats: DegreeStats
    kept: tuple  # core vertex i is original vertex kept[i]


def peel_dense_core(g: Graph) -> PeelResult:
    """Repeatedly delete the lowest-index vertex whose degree is at most the
    current edge/vertex ratio.

    Such a deletion never lowers the ratio, so the surviving core has average
    degree at least the input's and minimum degree above its own ratio: if
    the input averages at least 2(δ-1), the core has minimum degree >= δ.
    """
    if g.edge_count == 0:
        raise ValueError("peeling needs at least one edge")
    deg = g.degrees()
    inc = g.incidence()
    alive_v, alive_e = g.vertex_count, g.edge_count
    gone = [False] * g.vertex_count
    buckets = [set() for _ in range(max(deg) + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    # a vertex qualifies iff deg <= E/V iff deg <= E // V; the ratio never drops
    level = alive_e // alive_v
    heap = [v for v in range(g.vertex_count) if deg[v] <= level]
    heapq.heapify(heap)
    removed = []
    while heap:
        v = heapq.heappop(heap)
        if gone[v]:
            continue
        gone[v] = True
        removed.append(v)
        buckets[deg[v]].discard(v)
        alive_v -= 1
        alive_e -= deg[v]
        for w, _ in inc[v]:
            if gone[w]:
                continue
            buckets[deg[w]].discard(w)
            deg[w] -= 1
            buckets[deg[w]].add(w)
            if deg[w] <= level:
                heapq.heappush(heap, w)
        new_level = alive_e // alive_v
        for d in range(level + 1, min(new_level, len(buckets) - 1) + 1):
            for w in buckets[d]:
                heapq.heappush(heap, w)
        level = max(level, new_level)
    kept = tuple(v for v in range(g.vertex_count) if not gone[v])
    core = g.induced(kept)
    return PeelResult(core, tuple(removed), degree_stats(core), kept)


# ---------------------------------------------------------------- greedy tree embedding

@dataclass(frozen=True)
class EmbeddingFailure:
    """Greedy growth got stuck: ``tree_vertex`` (placed at ``host_vertex``,
    or unplaceable when that is None) had too few unused host neighbours."""

    tree_vertex: int
    host_vertex: Optional[int]
    reason: str

    def __bool__(self):
        return False


def embed_tree(h: Graph, t: Graph, root_requirement: Optional[int] = None):
    """Grow a copy of tree ``t`` in ``h`` greedily, breadth first.

    The tree is rooted at its lowest-index vertex of maximum degree and placed
    on the lowest-index host vertex with at least ``max(root_requirement,
    deg(root))`` distinct neighbours.  Every later vertex takes the smallest
    unused neighbour of its parent's image.  When ``girth(h) > |V(t)|`` each
    placed vertex has at most one neighbour inside the partial copy, so the
    growth cannot stall if host degrees cover the tree's child counts.
    Returns an :class:`Embedding` or an :class:`EmbeddingFailure`; no
    backtracking.
    """
    if not is_tree(t):
        raise ValueError("pattern is not a tree")
    tadj = [sorted(a) for a in t.neighbor_sets()]
    root = max(range(t.vertex_count), key=lambda v: (len(tadj[v]), -v))
    need = max(root_requirement or 0, len(tadj[root]))
    hadj = h.neighbor_sets()
    start = next((x for x in range(h.vertex_count) if len(hadj[x]) >= need), None)
    if start is None:
        return EmbeddingFailure(root, None, f"no host vertex of degree >= {need}")
    image = {root: start}
    used = {start}
    queue = deque([(root, -1)])
    while queue:
        a, parent = queue.popleft()
        children = [b for b in tadj[a] if b != parent]
        free = sorted(hadj[image[a]] - used)
        if len(free) < len(children):
            return EmbeddingFailure(
                a, image[a], f"needs {len(children)} unused neighbours, has {len(free)}"
            )
        for b, x in zip(children, free):
            image[b] = x
            used.add(x)
            queue.append((b, a))
    return Embedding(tuple(image[v] for v in range(t.vertex_count)))


# ---------------------------------------------------------------- KST

@dataclass(frozen=True)
class KstCertificate:
    left_set: tuple
    right_set: tuple


def kst_threshold(M: int, N: int, p: int, m: int, n: int) -> bool:
    """Exact test of ``N * C(p, m) > (n - 1) * C(M, m)``."""
    if not (0 <= m <= p <= M) or n < 1:
        raise ValueError("need 0 <= m <= p <= M and n >= 1")
    return N * comb(p, m) > (n - 1) * comb(M, m)


def kst_find(g: Graph, m: int, n: int, swap_sides: bool = False) -> Optional[KstCertificate]:
    """A K_{m,n} with its m vertices on side A and n on side B, or None.

    Every B vertex votes for each m-subset of its A-neighbourhood; the first
    subset collecting n votes is returned.  Only subsets that actually occur
    in some neighbourhood are ever touched.
    """
    sides = check_bipartition(g)
    if sides is None:
        raise ValueError("graph is not bipartite")
    side_a, side_b = sides if not swap_sides else (sides[1], sides[0])
    if m > len(side_a):
        raise ValueError(f"m = {m} exceeds |A| = {len(side_a)}")
    adj = g.neighbor_sets()
    votes: dict = {}
    for b in sorted(side_b):
        for subset in combinations(sorted(adj[b]), m):
            got = votes.setdefault(subset, [])
            got.append(b)
            if len(got) == n:
                return KstCertificate(subset, tuple(got))
    return None


def is_kmn_certificate(g: Graph, cert: KstCertificate, m: int, n: int) -> bool:
    adj = g.neighbor_sets()
    return (
        len(set(cert.left_set)) == m
        and len(set(cert.right_set)) == n
        and not set(cert.left_set) & set(cert.right_set)
        and all(b in adj[a] for a in cert.left_set for b in cert.right_set)
    )


# ---------------------------------------------------------------- local injectivity

def is_locally_injective_hom(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    hadj = h.neighbor_sets()
    gadj = g.neighbor_sets()
    if len(phi) != g.vertex_count:
        return False
    for u, v in g.edges:
        if phi[v] not in hadj[phi[u]]:
            return False
    return all(len({phi[w] for w in gadj[v]}) == len(gadj[v]) for v in range(g.vertex_count))


def locally_injective_hom(g: Graph, h: Graph) -> Optional[tuple]:
    """Lexicographically least locally injective homomorphism g -> h, or None.

    Plain backtracking in vertex order: worst case |V(h)|^|V(g)| nodes, so it
    is meant for small graphs only.
    """
    gadj = [sorted(a) for a in g.neighbor_sets()]
    hadj = h.neighbor_sets()
    hdeg = [len(a) for a in hadj]
    phi = [-1] * g.vertex_count

    def ok(v, x):
        if hdeg[x] < len(gadj[v]):
            return False
        for w in gadj[v]:
            if phi[w] >= 0 and x not in hadj[phi[w]]:
                return False
            # v and every other assigned neighbour of w need distinct images
            for z in gadj[w]:
                if z != v and phi[z] == x:
                    return False
        return True

    def go(v):
        if v == g.vertex_count:
            return True
        for x in range(h.vertex_count):
            if ok(v, x):
                phi[v] = x
                if go(v + 1):
                    return True
                phi[v] = -1
        return False

    return tuple(phi) if go(0) else None
