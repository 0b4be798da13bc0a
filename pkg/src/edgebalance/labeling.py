"""Binary edge labelings and the vertex labeling they induce.

A vertex takes the label held by the majority of its incident edges; a tie
(including an isolated vertex) leaves it unlabeled. The index of a
labeling is ``|v0 - v1|``, the difference between the number of vertices
labeled 0 and labeled 1.

Unlike the usual definition, labelings are not required to use both labels.
For ``q >= 2`` an edge-friendly labeling uses both anyway; for ``q <= 1``
both labelings of the lone edge are accepted as edge-friendly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import Graph, GraphFormatError, _content_lines, parse_edge_lines, to_edge_list


class VertexLabel(enum.IntEnum):
    ZERO = 0
    ONE = 1
    UNLABELED = 2


class SwapError(ValueError):
    """A swap was requested on edges that do not carry labels 0 and 1."""


@dataclass(frozen=True)
class EdgeLabeling:
    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        if len(labels) != self.graph.q:
            raise ValueError(f"expected {self.graph.q} labels, got {len(labels)}")
        if any(x not in (0, 1) for x in labels):
            raise ValueError("labels must be 0 or 1")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_one_edges(cls, g: Graph, one_edges: Iterable[tuple[int, int]]) -> "EdgeLabeling":
        """Labeling whose 1-edges are exactly ``one_edges`` (given as vertex pairs)."""
        labels = [0] * g.q
        for u, v in one_edges:
            labels[g.index_of(u, v)] = 1
        return cls(g, tuple(labels))

    @classmethod
    def from_bits(cls, g: Graph, bits: str) -> "EdgeLabeling":
        if any(c not in "01" for c in bits):
            raise ValueError(f"label string may only contain 0 and 1: {bits!r}")
        return cls(g, tuple(int(c) for c in bits))

    @classmethod
    def from_mask(cls, g: Graph, mask: int) -> "EdgeLabeling":
        """Bit ``i`` of ``mask`` is the label of edge ``i``."""
        return cls(g, tuple((mask >> i) & 1 for i in range(g.q)))

    @property
    def bits(self) -> str:
        return "".join(map(str, self.labels))

    @property
    def mask(self) -> int:
        return sum(1 << i for i, x in enumerate(self.labels) if x)

    def one_edges(self) -> list[tuple[int, int]]:
        return [e for e, x in zip(self.graph.edges, self.labels) if x]

    def __getitem__(self, edge_index: int) -> int:
        return self.labels[edge_index]


@dataclass(frozen=True)
class PartialVertexLabeling:
    values: tuple[VertexLabel, ...]

    def __getitem__(self, v: int) -> VertexLabel:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    def vertices(self, label: VertexLabel) -> list[int]:
        return [v for v, x in enumerate(self.values) if x == label]


@dataclass(frozen=True)
class LabelCounts:
    e0: int
    e1: int
    v0: int
    v1: int
    unlabeled: int

    @property
    def index(self) -> int:
        return abs(self.v0 - self.v1)

    def to_dict(self) -> dict:
        return {"e0": self.e0, "e1": self.e1, "v0": self.v0, "v1": self.v1,
                "unlabeled": self.unlabeled, "index": self.index}


def one_degrees(l: EdgeLabeling) -> np.ndarray:
    """Number of incident 1-edges at every vertex."""
    g = l.graph
    us, vs = g.endpoint_arrays
    w = np.asarray(l.labels, dtype=np.int64)
    return (np.bincount(us, weights=w, minlength=g.p)
            + np.bincount(vs, weights=w, minlength=g.p)).astype(np.int64)


def _vertex_codes(l: EdgeLabeling) -> np.ndarray:
    d1 = one_degrees(l)
    d0 = np.asarray(l.graph.degrees, dtype=np.int64) - d1
    return np.where(d1 > d0, VertexLabel.ONE, np.where(d0 > d1, VertexLabel.ZERO, VertexLabel.UNLABELED))


def induced_vertex_labeling(l: EdgeLabeling) -> PartialVertexLabeling:
    return PartialVertexLabeling(tuple(VertexLabel(int(c)) for c in _vertex_codes(l)))


def counts(l: EdgeLabeling) -> LabelCounts:
    codes = _vertex_codes(l)
    e1 = sum(l.labels)
    tally = np.bincount(codes, minlength=3)
    return LabelCounts(e0=l.graph.q - e1, e1=e1, v0=int(tally[0]), v1=int(tally[1]),
                       unlabeled=int(tally[2]))


def index(l: EdgeLabeling) -> int:
    return counts(l).index


def is_edge_friendly(l: EdgeLabeling) -> bool:
    e1 = sum(l.labels)
    return abs(l.graph.q - 2 * e1) <= 1


def is_strongly_edge_balanced(l: EdgeLabeling) -> bool:
    c = counts(l)
    return c.e0 == c.e1 and c.v0 == c.v1


def swap_pair(l: EdgeLabeling, e_zero: int, e_one: int) -> EdgeLabeling:
    """Exchange the labels of a 0-edge and a 1-edge (by canonical index)."""
    if l.labels[e_zero] != 0 or l.labels[e_one] != 1:
        g = l.graph
        raise SwapError(
            f"swap expects edge {g.edges[e_zero]} labeled 0 and edge {g.edges[e_one]} labeled 1, "
            f"found {l.labels[e_zero]} and {l.labels[e_one]}")
    labels = list(l.labels)
    labels[e_zero], labels[e_one] = 1, 0
    return EdgeLabeling(l.graph, tuple(labels))


def complement(l: EdgeLabeling) -> EdgeLabeling:
    return EdgeLabeling(l.graph, tuple(1 - x for x in l.labels))


# ---------------------------------------------------------------------------
# labeling text format: an edge-list document followed by one line of bits
# ---------------------------------------------------------------------------

def to_labeling_text(l: EdgeLabeling) -> str:
    return to_edge_list(l.graph) + l.bits + "\n"


def from_labeling_text(text: str) -> EdgeLabeling:
    lines = list(_content_lines(text))
    bits = ""
    if len(lines) >= 2 and len(lines[-1][1].split()) == 1:
        bits = lines.pop()[1]
    g = parse_edge_lines(lines)
    if len(bits) != g.q:
        line = lines[-1][0] + 1 if lines else None
        raise GraphFormatError(f"expected {g.q} label characters, got {len(bits)}", line)
    try:
        return EdgeLabeling.from_bits(g, bits)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None

