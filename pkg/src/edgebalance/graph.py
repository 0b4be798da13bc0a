"""Finite simple undirected graphs with a fixed, canonical edge indexing.

Vertices are the integers ``0..p-1``. Edges are stored as ``(u, v)`` pairs
with ``u < v`` in sorted order, so the position of an edge in
``Graph.edges`` is its canonical index. Labelings are sequences indexed by
that position, which is why graphs are immutable.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Raised for a malformed edge-list document."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        p = self.vertex_count
        if p < 0:
            raise ValueError("vertex_count must be nonnegative")
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < p and 0 <= v < p):
                raise ValueError(f"edge ({u}, {v}) out of range for {p} vertices")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def p(self) -> int:
        return self.vertex_count

    @property
    def q(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map ``(u, v)`` with ``u < v`` to its canonical index."""
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def endpoint_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        if not self.edges:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty
        arr = np.asarray(self.edges, dtype=np.int64)
        return arr[:, 0].copy(), arr[:, 1].copy()

    def index_of(self, u: int, v: int) -> int:
        """Canonical index of the edge joining ``u`` and ``v`` (either order)."""
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise KeyError(f"({u}, {v}) is not an edge") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``x`` renamed to ``mapping[x]``."""
        if sorted(mapping) != list(range(self.vertex_count)):
            raise ValueError("mapping must be a permutation of the vertices")
        return Graph(self.vertex_count, tuple((mapping[u], mapping[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, q={self.q})"


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.vertex_count:
        raise IndexError(f"vertex {v} out of range for {g.vertex_count} vertices")
    return g.degrees[v]


def is_regular(g: Graph) -> Optional[int]:
    """Common degree r if every vertex has degree r, else None.

    The empty graph on zero vertices has no regularity.
    """
    degs = set(g.degrees)
    if len(degs) == 1:
        return degs.pop()
    return None


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts ``0..m-1`` and ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite needs m, n >= 1")
    return Graph(m + n, tuple((i, m + j) for i in range(m) for j in range(n)))


def crown_graph(n: int) -> Graph:
    """K_{n,n} minus a perfect matching: a_i = i, b_j = n + j, a_i ~ b_j iff i != j."""
    if n < 2:
        raise ValueError("crown_graph needs n >= 2")
    return Graph(2 * n, tuple((i, n + j) for i in range(n) for j in range(n) if i != j))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path_graph needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError("hypercube needs d >= 0")
    p = 1 << d
    return Graph(p, tuple((x, x | (1 << b)) for x in range(p) for b in range(d) if not x >> b & 1))


def random_graph(p: int, prob: float, rng: random.Random) -> Graph:
    """G(p, prob) sample; pairs are visited in lexicographic order."""
    return Graph(p, tuple(e for e in combinations(range(p), 2) if rng.random() < prob))


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_edge_lines(lines: Iterable[tuple[int, str]]) -> Graph:
    """Build a graph from ``(lineno, content)`` pairs, first pair being the vertex count."""
    it = iter(lines)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise GraphFormatError("missing vertex count") from None
    try:
        p = int(header)
    except ValueError:
        raise GraphFormatError(f"expected vertex count, got {header!r}", lineno) from None
    if p < 0:
        raise GraphFormatError("negative vertex count", lineno)

    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, line in it:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < p and 0 <= v < p):
            raise GraphFormatError(f"vertex index out of range in {line!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(p, tuple(edges))


def from_edge_list(text: str) -> Graph:
    return parse_edge_lines(_content_lines(text))


def to_edge_list(g: Graph) -> str:
    lines = [str(g.vertex_count)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
