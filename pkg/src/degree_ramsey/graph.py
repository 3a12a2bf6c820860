"""Host and pattern graphs, colorings, and the line-oriented file formats.

A :class:`Graph` is an undirected multigraph on the dense vertex range
``0..vertex_count-1``.  The position of an edge in ``edges`` is its
canonical index; colorings, factorizations and the arrowing search all
address edges by that index.
"""
from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

INFINITE = math.inf


class GraphFormatError(ValueError):
    """Malformed graph, coloring or embedding text.  Carries the 1-based line."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple = ()
    bipartition: Optional[tuple] = None

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
            norm.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))
        if self.bipartition is not None:
            a, b = (frozenset(int(x) for x in side) for side in self.bipartition)
            if a & b or len(a) + len(b) != self.vertex_count or any(
                not 0 <= x < self.vertex_count for x in a | b
            ):
                raise ValueError("bipartition must partition the vertex set")
            for u, v in norm:
                if (u in a) == (v in a):
                    raise ValueError(f"edge ({u}, {v}) lies inside one side of the bipartition")
            object.__setattr__(self, "bipartition", (a, b))

    @classmethod
    def with_prefix_sides(cls, vertex_count: int, edges: Iterable, side_a_size: int) -> "Graph":
        """Graph whose side A is ``0..side_a_size-1`` (the ``bip k`` layout)."""
        a = frozenset(range(side_a_size))
        b = frozenset(range(side_a_size, vertex_count))
        return cls(vertex_count, tuple(edges), (a, b))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbor_sets(self) -> list[set]:
        """Distinct neighbours per vertex (parallel edges collapse)."""
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def incidence(self) -> list[list[tuple[int, int]]]:
        """Per vertex, the list of ``(neighbour, edge_index)`` pairs."""
        inc = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return inc

    def prefix_side_size(self) -> Optional[int]:
        """``k`` if side A is exactly ``0..k-1``, else None."""
        if self.bipartition is None:
            return None
        a = self.bipartition[0]
        k = len(a)
        return k if a == frozenset(range(k)) else None

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Induced subgraph on ``keep`` (sorted), relabelled in increasing order."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        bip = None
        if self.bipartition is not None:
            a = frozenset(index[v] for v in keep if v in self.bipartition[0])
            bip = (a, frozenset(range(len(keep))) - a)
        return Graph(len(keep), tuple(edges), bip)


@dataclass(frozen=True)
class EdgeColoring:
    color_count: int
    assignment: tuple

    def __post_init__(self):
        if self.color_count < 1:
            raise ValueError("color_count must be positive")
        values = tuple(int(c) for c in self.assignment)
        for c in values:
            if not 0 <= c < self.color_count:
                raise ValueError(f"color {c} outside [0, {self.color_count})")
        object.__setattr__(self, "assignment", values)

    def check_host(self, h: Graph) -> None:
        if len(self.assignment) != h.edge_count:
            raise ValueError(
                f"coloring has {len(self.assignment)} entries, host has {h.edge_count} edges"
            )


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int
    average_degree: Fraction


@dataclass(frozen=True)
class Embedding:
    """Injective map ``pattern vertex -> host vertex`` stored as a tuple."""

    map: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(x) for x in self.map))


def is_embedding(pattern: Graph, host: Graph, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` is injective and carries every pattern edge onto a
    host edge, respecting edge multiplicity."""
    if len(mapping) != pattern.vertex_count or len(set(mapping)) != len(mapping):
        return False
    if any(not 0 <= x < host.vertex_count for x in mapping):
        return False
    available = Counter(host.edges)
    needed = Counter()
    for u, v in pattern.edges:
        a, b = mapping[u], mapping[v]
        needed[(a, b) if a < b else (b, a)] += 1
    return all(available[e] >= k for e, k in needed.items())


# ---------------------------------------------------------------- file formats

def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"expected integer, got {tok!r}", lineno) from None


def parse_graph(text: str, extra: Optional[dict] = None) -> Graph:
    """Parse the ``n`` / ``bip`` / ``e`` graph format.

    ``extra`` maps additional line keywords to lists that collect their integer
    arguments; it lets sidecar formats (supergraph inclusion, ...) share the
    parser.  Unknown keywords are errors.
    """
    n = None
    bip = None
    edges = []
    for lineno, toks in _lines(text):
        key, args = toks[0], toks[1:]
        if n is None and key != "n":
            raise GraphFormatError("first line must be 'n <vertex_count>'", lineno)
        if key == "n":
            if n is not None:
                raise GraphFormatError("duplicate 'n' line", lineno)
            if len(args) != 1:
                raise GraphFormatError("'n' takes one argument", lineno)
            n = _int(args[0], lineno)
            if n < 0:
                raise GraphFormatError("vertex count must be nonnegative", lineno)
        elif key == "bip":
            if bip is not None or len(args) != 1:
                raise GraphFormatError("'bip' must appear once with one argument", lineno)
            bip = (_int(args[0], lineno), lineno)
            if not 0 <= bip[0] <= n:
                raise GraphFormatError(f"bip {bip[0]} out of range", lineno)
        elif key == "e":
            if len(args) != 2:
                raise GraphFormatError("'e' takes two arguments", lineno)
            u, v = _int(args[0], lineno), _int(args[1], lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"endpoint out of range in edge {u} {v}", lineno)
            if u == v:
                raise GraphFormatError(f"loop edge at vertex {u}", lineno)
            if bip is not None and (u < bip[0]) == (v < bip[0]):
                raise GraphFormatError(f"edge {u} {v} violates 'bip {bip[0]}'", lineno)
            edges.append((u, v, lineno))
        elif extra is not None and key in extra:
            extra[key].append(tuple(_int(a, lineno) for a in args))
        else:
            raise GraphFormatError(f"unknown line type {key!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'n' line")
    if bip is not None:
        # edges read before the bip line still have to respect it
        for u, v, lineno in edges:
            if (u < bip[0]) == (v < bip[0]):
                raise GraphFormatError(f"edge {u} {v} violates 'bip {bip[0]}'", lineno)
        return Graph.with_prefix_sides(n, [(u, v) for u, v, _ in edges], bip[0])
    return Graph(n, tuple((u, v) for u, v, _ in edges))


def serialize_graph(g: Graph) -> str:
    """Text form of ``g``.  A bipartition is written as ``bip k`` and must
    therefore have side A equal to ``0..k-1``."""
    out = [f"n {g.vertex_count}"]
    if g.bipartition is not None:
        k = g.prefix_side_size()
        if k is None:
            raise ValueError("bipartition is not of the form 0..k-1 | k..n-1; relabel first")
        out.append(f"bip {k}")
    out.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    s = None
    assigned = {}
    for lineno, toks in _lines(text):
        if s is None:
            if toks[0] != "s" or len(toks) != 2:
                raise GraphFormatError("first line must be 's <color_count>'", lineno)
            s = _int(toks[1], lineno)
            if s < 1:
                raise GraphFormatError("color count must be positive", lineno)
            continue
        if toks[0] != "c" or len(toks) != 3:
            raise GraphFormatError("expected 'c <edge_index> <color>'", lineno)
        e, c = _int(toks[1], lineno), _int(toks[2], lineno)
        if e in assigned:
            raise GraphFormatError(f"edge {e} colored twice", lineno)
        if not 0 <= c < s:
            raise GraphFormatError(f"color {c} outside [0, {s})", lineno)
        assigned[e] = c
    if s is None:
        raise GraphFormatError("missing 's' line")
    if sorted(assigned) != list(range(len(assigned))):
        raise GraphFormatError("edge indices must cover 0..m-1 exactly once")
    return EdgeColoring(s, tuple(assigned[i] for i in range(len(assigned))))


def serialize_coloring(col: EdgeColoring) -> str:
    out = [f"s {col.color_count}"]
    out.extend(f"c {i} {c}" for i, c in enumerate(col.assignment))
    return "\n".join(out) + "\n"


def serialize_embedding(emb: Embedding) -> str:
    return "".join(f"m {p} {h}\n" for p, h in enumerate(emb.map))


def parse_embedding(text: str) -> Embedding:
    pairs = {}
    for lineno, toks in _lines(text):
        if toks[0] != "m" or len(toks) != 3:
            raise GraphFormatError("expected 'm <pattern_vertex> <host_vertex>'", lineno)
        pairs[_int(toks[1], lineno)] = _int(toks[2], lineno)
    if sorted(pairs) != list(range(len(pairs))):
        raise GraphFormatError("pattern vertices must cover 0..k-1")
    return Embedding(tuple(pairs[i] for i in range(len(pairs))))


# ---------------------------------------------------------------- structure

def degree_stats(g: Graph) -> DegreeStats:
    if g.vertex_count == 0:
        raise ValueError("degree statistics need at least one vertex")
    deg = g.degrees()
    return DegreeStats(min(deg), max(deg), Fraction(2 * g.edge_count, g.vertex_count))


def girth(g: Graph, stop_below: Optional[int] = None):
    """Length of a shortest cycle, or ``INFINITE`` for a forest.

    Parallel edges form 2-cycles.  BFS from every vertex, tracking the tree
    edge by index so parallel edges are seen as distinct.  Each BFS stops once
    it cannot beat the best cycle found so far.  With ``stop_below`` the search
    returns as soon as a cycle shorter than it is found (the returned value is
    then only an upper bound on the girth, but still ``< stop_below``).
    """
    seen = set()
    for u, v in g.edges:
        if (u, v) in seen:
            return 2
        seen.add((u, v))
    inc = g.incidence()
    best = INFINITE
    for root in range(g.vertex_count):
        dist = {root: 0}
        via = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y, e in inc[x]:
                if e == via[x]:
                    continue
                if y in dist:
                    length = dist[x] + dist[y] + 1
                    if length < best:
                        best = length
                else:
                    dist[y] = dist[x] + 1
                    via[y] = e
                    queue.append(y)
        if stop_below is not None and best < stop_below:
            return best
    return best


def color_class(h: Graph, col: EdgeColoring, c: int) -> Graph:
    """Spanning subgraph of the edges colored ``c``, original order kept."""
    col.check_host(h)
    if not 0 <= c < col.color_count:
        raise ValueError(f"color index {c} outside [0, {col.color_count})")
    edges = tuple(e for e, k in zip(h.edges, col.assignment) if k == c)
    return Graph(h.vertex_count, edges, h.bipartition)


def check_bipartition(g: Graph):
    """Return ``(side_a, side_b)`` as frozensets, or None for non-bipartite ``g``.

    A declared bipartition is returned as is (construction already validated
    it).  Otherwise each component is 2-colored by BFS with its lowest-index
    vertex placed on side A.
    """
    if g.bipartition is not None:
        return g.bipartition
    adj = g.neighbor_sets()
    side = [-1] * g.vertex_count
    for start in range(g.vertex_count):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    a = frozenset(v for v in range(g.vertex_count) if side[v] == 0)
    return a, frozenset(range(g.vertex_count)) - a


def is_tree(g: Graph) -> bool:
    if g.vertex_count == 0 or g.edge_count != g.vertex_count - 1:
        return False
    return connected_components(g) == 1


def connected_components(g: Graph) -> int:
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = g.vertex_count
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count
