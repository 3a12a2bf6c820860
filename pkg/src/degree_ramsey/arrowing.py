"""Deciding H -> (G)_s: does every s-edge-coloring of H contain a
monochromatic G?"""
from __future__ import annotations

import enum
import time
from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional, Sequence

import numpy as np

from .construct import make_pattern_graph
from .graph import EdgeColoring, Graph, check_bipartition
from .patterns import PatternMatcher, find_monochromatic
from .targets import PatternSpec

ORACLE_LIMIT = 10**7


class Outcome(enum.Enum):
    ARROWS = "arrows"
    NOT_ARROWS = "not_arrows"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10**7
    max_seconds: float = 600.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class ArrowVerdict:
    outcome: Outcome
    nodes_explored: int = 0
    certificate: Optional[EdgeColoring] = None
    seconds: float = 0.0

    @property
    def arrows(self) -> bool:
        return self.outcome is Outcome.ARROWS

    @property
    def exit_code(self) -> int:
        return {Outcome.ARROWS: 0, Outcome.NOT_ARROWS: 1, Outcome.UNKNOWN: 2}[self.outcome]


def verify_coloring(h: Graph, col: EdgeColoring, pat: PatternSpec, matcher=None) -> bool:
    """True iff ``col`` has no monochromatic copy of ``pat`` (a non-arrowing witness)."""
    return find_monochromatic(h, col, pat, matcher) is None


def canonical_colors(assignment: Sequence[int]) -> tuple:
    """Relabel colors in order of first appearance along the edge list."""
    relabel: dict = {}
    return tuple(relabel.setdefault(c, len(relabel)) for c in assignment)


def _not_arrows(h, pat, matcher, assignment, s, nodes, t0):
    cert = EdgeColoring(s, canonical_colors(assignment))
    if not verify_coloring(h, cert, pat, matcher):
        raise RuntimeError("search produced a coloring that contains the pattern (internal error)")
    return ArrowVerdict(Outcome.NOT_ARROWS, nodes, cert, time.monotonic() - t0)


class _OutOfBudget(Exception):
    pass


def decide_arrowing(
    h: Graph, pat: PatternSpec, s: int, budget: Optional[SearchBudget] = None
) -> ArrowVerdict:
    """Backtracking over edge colors with incremental pruning.

    Edges are colored in order of decreasing endpoint-degree sum.  After each
    assignment only copies through the edge just colored are looked for: a
    monochromatic copy in a complete coloring has a last-colored edge, and
    would have been caught when that edge received its color.  Colors are
    interchangeable, so an edge may only open color ``k+1`` once colors
    ``0..k`` are in use.
    """
    if s < 1:
        raise ValueError("need at least one color")
    budget = budget or SearchBudget()
    t0 = time.monotonic()
    matcher = PatternMatcher(pat)
    m = h.edge_count
    if matcher.graph.edge_count == 0 or matcher.size > h.vertex_count:
        if matcher.size <= h.vertex_count:
            return ArrowVerdict(Outcome.ARROWS, 0, None, time.monotonic() - t0)
        return _not_arrows(h, pat, matcher, [0] * m, s, 0, t0)

    deg = h.degrees()
    order = sorted(range(m), key=lambda e: (-(deg[h.edges[e][0]] + deg[h.edges[e][1]]), e))
    adj = [[set() for _ in range(h.vertex_count)] for _ in range(s)]
    mult = [Counter() for _ in range(s)]
    assignment = [-1] * m
    nodes = 0

    def add(c, u, v):
        mult[c][(u, v)] += 1
        adj[c][u].add(v)
        adj[c][v].add(u)

    def remove(c, u, v):
        mult[c][(u, v)] -= 1
        if not mult[c][(u, v)]:
            adj[c][u].discard(v)
            adj[c][v].discard(u)

    def go(i, used):
        nonlocal nodes
        if i == m:
            return True
        e = order[i]
        u, v = h.edges[e]
        for c in range(min(s, used + 1)):
            nodes += 1
            if nodes > budget.max_nodes or (
                nodes % 1024 == 0 and time.monotonic() - t0 > budget.max_seconds
            ):
                raise _OutOfBudget
            add(c, u, v)
            if matcher.through_edge(adj[c], u, v) is None:
                assignment[e] = c
                if go(i + 1, max(used, c + 1)):
                    return True
                assignment[e] = -1
            remove(c, u, v)
        return False

    try:
        found = go(0, 0)
    except _OutOfBudget:
        return ArrowVerdict(Outcome.UNKNOWN, nodes, None, time.monotonic() - t0)
    if found:
        return _not_arrows(h, pat, matcher, assignment, s, nodes, t0)
    return ArrowVerdict(Outcome.ARROWS, nodes, None, time.monotonic() - t0)


def enumerate_copies(h: Graph, pattern: Graph) -> list[tuple]:
    """Edge-index sets of every copy of ``pattern`` in ``h``, by trying all
    injective vertex maps.  Parallel host edges give distinct copies."""
    by_pair: dict = {}
    for i, e in enumerate(h.edges):
        by_pair.setdefault(e, []).append(i)
    copies = set()
    for image in permutations(range(h.vertex_count), pattern.vertex_count):
        choices = []
        for a, b in pattern.edges:
            x, y = image[a], image[b]
            idx = by_pair.get((x, y) if x < y else (y, x))
            if not idx:
                break
            choices.append(idx)
        else:
            for pick in product(*choices):
                copies.add(tuple(sorted(pick)))
    return sorted(copies)


def brute_force_arrowing(h: Graph, pat: PatternSpec, s: int) -> ArrowVerdict:
    """Exhaustive oracle: every copy of the pattern is listed up front, then
    all s^|E| colorings are checked in lexicographic order (edge 0 most
    significant).  The first coloring leaving every copy non-monochromatic is
    the certificate."""
    m = h.edge_count
    if s**m > ORACLE_LIMIT:
        raise ValueError(f"{s}^{m} colorings exceed the oracle limit of {ORACLE_LIMIT}")
    t0 = time.monotonic()
    pattern = make_pattern_graph(pat)
    if pattern.vertex_count > h.vertex_count:
        cert = EdgeColoring(s, (0,) * m)
        return ArrowVerdict(Outcome.NOT_ARROWS, 1, cert, time.monotonic() - t0)
    copies = enumerate_copies(h, pattern)
    if any(len(c) == 0 for c in copies):
        return ArrowVerdict(Outcome.ARROWS, s**m, None, time.monotonic() - t0)
    total = s**m
    weights = s ** np.arange(m - 1, -1, -1, dtype=np.int64)
    chunk = 1 << 16
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cols = (idx[:, None] // weights[None, :]) % s
        bad = np.zeros(len(idx), dtype=bool)
        for cp in copies:
            sub = cols[:, list(cp)]
            bad |= np.all(sub == sub[:, :1], axis=1)
        good = np.flatnonzero(~bad)
        if len(good):
            cert = EdgeColoring(s, tuple(int(x) for x in cols[good[0]]))
            return ArrowVerdict(Outcome.NOT_ARROWS, start + int(good[0]) + 1, cert, time.monotonic() - t0)
    return ArrowVerdict(Outcome.ARROWS, total, None, time.monotonic() - t0)


@dataclass(frozen=True)
class ScanResult:
    max_degree: int
    host: Graph
    host_index: int
    bound: str  # which degree Ramsey number this bounds from above


def host_upper_bound_scan(
    pat: PatternSpec, s: int, hosts: Sequence[Graph], budget: Optional[SearchBudget] = None
) -> Optional[ScanResult]:
    """Smallest maximum degree among the given hosts that arrow the pattern
    (ties: fewer vertices, then earlier host).  This is only an upper bound
    on the degree Ramsey number, and on the bipartite one when every host is
    bipartite."""
    if not hosts:
        raise ValueError("no hosts given")
    best = None
    for i, h in enumerate(hosts):
        if not decide_arrowing(h, pat, s, budget).arrows:
            continue
        key = (h.max_degree(), h.vertex_count, i)
        if best is None or key < best[0]:
            best = (key, h)
    if best is None:
        return None
    bipartite = all(check_bipartition(h) is not None for h in hosts)
    (delta, _, i), h = best
    return ScanResult(delta, h, i, "br_delta upper bound" if bipartite else "r_delta upper bound")
