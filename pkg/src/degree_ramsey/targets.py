"""Target patterns and their mini-grammar.

``S<n>`` star K_{1,n}, ``P<n>`` path on n vertices, ``C<n>`` cycle,
``K{<m>,<n>}`` complete bipartite, ``T@<path>`` tree file, ``G@<path>``
graph file.  No whitespace is allowed inside a pattern.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .graph import Graph, GraphFormatError, is_tree, parse_graph


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, column: Optional[int] = None):
        self.column = column
        if column is not None:
            message = f"column {column}: {message}"
        super().__init__(message)


KINDS = ("star", "path", "cycle", "complete_bipartite", "tree_file", "graph_file")


@dataclass(frozen=True)
class PatternSpec:
    kind: str
    params: tuple = ()
    path: Optional[str] = None
    graph: Optional[Graph] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        p = self.params
        if self.kind in ("star", "path") and p[0] < 1:
            raise ValueError(f"{self.kind} size must be at least 1")
        if self.kind == "cycle" and p[0] < 3:
            raise ValueError("cycle length must be at least 3")
        if self.kind == "complete_bipartite" and min(p) < 1:
            raise ValueError("complete bipartite sides must be at least 1")
        if self.graph is not None:
            if len(set(self.graph.edges)) != self.graph.edge_count:
                raise ValueError("patterns must be simple graphs")
            if self.kind == "tree_file" and not is_tree(self.graph):
                raise ValueError("T@ file does not contain a tree")

    @classmethod
    def star(cls, n: int) -> "PatternSpec":
        return cls("star", (n,))

    @classmethod
    def path_graph(cls, n: int) -> "PatternSpec":
        return cls("path", (n,))

    @classmethod
    def cycle(cls, n: int) -> "PatternSpec":
        return cls("cycle", (n,))

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> "PatternSpec":
        return cls("complete_bipartite", (m, n))

    @classmethod
    def tree(cls, g: Graph) -> "PatternSpec":
        return cls("tree_file", (), None, g)

    @classmethod
    def from_graph(cls, g: Graph) -> "PatternSpec":
        return cls("graph_file", (), None, g)

    def __str__(self):
        if self.kind == "star":
            return f"S{self.params[0]}"
        if self.kind == "path":
            return f"P{self.params[0]}"
        if self.kind == "cycle":
            return f"C{self.params[0]}"
        if self.kind == "complete_bipartite":
            return "K{%d,%d}" % self.params
        prefix = "T@" if self.kind == "tree_file" else "G@"
        return prefix + (self.path or "<inline>")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def expect(self, ch: str) -> None:
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise PatternSyntaxError(f"expected {ch!r}", self.pos + 1)
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise PatternSyntaxError("expected decimal integer", start + 1)
        return int(self.text[start:self.pos])

    def end(self) -> None:
        if self.pos != len(self.text):
            raise PatternSyntaxError("unexpected trailing characters", self.pos + 1)


def parse_pattern(text: str) -> PatternSpec:
    """Parse a pattern string; file patterns are loaded and validated."""
    if not text:
        raise PatternSyntaxError("empty pattern", 1)
    for i, ch in enumerate(text):
        if ch.isspace():
            raise PatternSyntaxError("whitespace is not allowed", i + 1)
    if text[:2] in ("T@", "G@"):
        path = text[2:]
        if not path:
            raise PatternSyntaxError("missing file path", 3)
        try:
            g = parse_graph(Path(path).read_text())
        except OSError as exc:
            raise PatternSyntaxError(f"cannot read {path}: {exc.strerror}", 3) from None
        except GraphFormatError as exc:
            raise PatternSyntaxError(f"bad graph file {path}: {exc}", 3) from None
        kind = "tree_file" if text[0] == "T" else "graph_file"
        try:
            return PatternSpec(kind, (), path, g)
        except ValueError as exc:
            raise PatternSyntaxError(f"{path}: {exc}", 3) from None
    sc = _Scanner(text)
    head = text[0]
    sc.pos = 1
    if head in "SPC":
        n = sc.integer()
        sc.end()
        kind = {"S": "star", "P": "path", "C": "cycle"}[head]
        try:
            return PatternSpec(kind, (n,))
        except ValueError as exc:
            raise PatternSyntaxError(str(exc), 2) from None
    if head == "K":
        sc.expect("{")
        m = sc.integer()
        sc.expect(",")
        n = sc.integer()
        sc.expect("}")
        sc.end()
        try:
            return PatternSpec("complete_bipartite", (m, n))
        except ValueError as exc:
            raise PatternSyntaxError(str(exc), 3) from None
    raise PatternSyntaxError(f"unknown pattern kind {head!r}", 1)
