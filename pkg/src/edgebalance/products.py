"""Lexicographic, direct and Cartesian graph products.

Product vertex ``(x, y)`` with ``x`` in the first factor and ``y`` in the
second is numbered ``x * p(second) + y``. Each constructor checks its
result against the closed-form edge count before returning.
"""
from __future__ import annotations

from .graph import Graph


def lexicographic_size(g: Graph, h: Graph) -> int:
    return h.p ** 2 * g.q + g.p * h.q


def direct_size(g: Graph, h: Graph) -> int:
    return 2 * g.q * h.q


def cartesian_size(g: Graph, h: Graph) -> int:
    return h.p * g.q + g.p * h.q


def _checked(result: Graph, expected: int, name: str) -> Graph:
    if result.q != expected:
        raise RuntimeError(f"{name}: built {result.q} edges, size formula gives {expected}")
    return result


def lexicographic_product(g1: Graph, g2: Graph) -> Graph:
    """G1[G2]: (x1,y1) ~ (x2,y2) iff x1 ~ x2, or x1 == x2 and y1 ~ y2."""
    m = g2.p
    edges = []
    for x1, x2 in g1.edges:
        for y1 in range(m):
            for y2 in range(m):
                edges.append((x1 * m + y1, x2 * m + y2))
    for x in range(g1.p):
        for y1, y2 in g2.edges:
            edges.append((x * m + y1, x * m + y2))
    return _checked(Graph(g1.p * m, tuple(edges)), lexicographic_size(g1, g2), "lexicographic_product")


def direct_product(g1: Graph, g2: Graph) -> Graph:
    """G1 x G2: (x1,y1) ~ (x2,y2) iff x1 ~ x2 and y1 ~ y2."""
    m = g2.p
    edges = []
    for x1, x2 in g1.edges:
        for y1, y2 in g2.edges:
            edges.append((x1 * m + y1, x2 * m + y2))
            edges.append((x1 * m + y2, x2 * m + y1))
    return _checked(Graph(g1.p * m, tuple(edges)), direct_size(g1, g2), "direct_product")


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """G1 □ G2: one coordinate equal and the other adjacent."""
    m = g2.p
    edges = []
    for x1, x2 in g1.edges:
        for y in range(m):
            edges.append((x1 * m + y, x2 * m + y))
    for x in range(g1.p):
        for y1, y2 in g2.edges:
            edges.append((x * m + y1, x * m + y2))
    return _checked(Graph(g1.p * m, tuple(edges)), cartesian_size(g1, g2), "cartesian_product")


PRODUCTS = {
    "lex": lexicographic_product,
    "direct": direct_product,
    "cartesian": cartesian_product,
}


def swap_factors_mapping(p1: int, p2: int) -> list[int]:
    """Vertex map from the numbering of G1*G2 to that of G2*G1."""
    return [y * p1 + x for x in range(p1) for y in range(p2)]
