"""Graphviz rendering of labelings.

1-edges are drawn solid; 0-edges are kept for layout but made invisible,
so the picture shows only the 1-edges. Vertices are filled black (label 1),
gray (label 0) or left open (unlabeled).
"""
from __future__ import annotations

from typing import Callable, Optional

from .labeling import EdgeLabeling, VertexLabel, counts, induced_vertex_labeling

_FILL = {
    VertexLabel.ONE: 'style=filled, fillcolor="black"',
    VertexLabel.ZERO: 'style=filled, fillcolor="gray60"',
    VertexLabel.UNLABELED: 'style=solid, fillcolor="white"',
}


def labeling_to_dot(l: EdgeLabeling, name: str = "labeling",
                    vertex_name: Optional[Callable[[int], str]] = None,
                    ranks: Optional[list[list[int]]] = None) -> str:
    vname = vertex_name or (lambda x: f"v{x}")
    induced = induced_vertex_labeling(l)
    c = counts(l)
    out = [f"graph {name} {{",
           f'  label="index {c.index}: v0={c.v0} v1={c.v1} unlabeled={c.unlabeled}";',
           '  node [shape=circle, label="", width=0.25];']
    for x in range(l.graph.p):
        out.append(f"  {vname(x)} [{_FILL[induced[x]]}, xlabel=\"{vname(x)}\"];")
    for group in ranks or []:
        out.append("  { rank=same; " + " ".join(vname(x) for x in group) + " }")
    for (u, v), lab in zip(l.graph.edges, l.labels):
        style = "solid" if lab else "invis"
        out.append(f"  {vname(u)} -- {vname(v)} [style={style}];")
    out.append("}")
    return "\n".join(out) + "\n"


def crown_labeling_to_dot(l: EdgeLabeling) -> str:
    n = l.graph.p // 2
    idx = counts(l).index
    return labeling_to_dot(
        l, name=f"crown{n}_index{idx}",
        vertex_name=lambda x: f"a{x}" if x < n else f"b{x - n}",
        ranks=[list(range(n)), list(range(n, 2 * n))])
