"""Textual graph descriptors.

Grammar (tokens separated by ``:``)::

    spec    := complete:N | bipartite:M,N | crown:N | path:N | cycle:N
             | cube:D | file:PATH | product:KIND:spec:spec
    KIND    := lex | direct | cartesian

A top-level ``file:`` takes the rest of the string as its path; inside a
product the path is a single token.
"""
from __future__ import annotations

from pathlib import Path

from . import graph as gr
from .graph import Graph
from .products import PRODUCTS


class GraphSpecError(ValueError):
    pass


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphSpecError(f"{what}: expected an integer, got {tok!r}") from None


_SIMPLE = {
    "complete": gr.complete_graph,
    "crown": gr.crown_graph,
    "path": gr.path_graph,
    "cycle": gr.cycle_graph,
    "cube": gr.hypercube,
}


def _parse(tokens: list[str], pos: int, top: bool) -> tuple[Graph, int]:
    if pos >= len(tokens):
        raise GraphSpecError("unexpected end of graph descriptor")
    kind = tokens[pos]
    if kind == "file":
        if pos + 1 >= len(tokens):
            raise GraphSpecError("file: needs a path")
        if top:
            path, end = ":".join(tokens[pos + 1:]), len(tokens)
        else:
            path, end = tokens[pos + 1], pos + 2
        try:
            return gr.from_edge_list(Path(path).read_text(encoding="utf-8")), end
        except OSError as exc:
            raise GraphSpecError(f"file:{path}: {exc.strerror}") from None
    if kind == "product":
        if pos + 1 >= len(tokens) or tokens[pos + 1] not in PRODUCTS:
            got = tokens[pos + 1] if pos + 1 < len(tokens) else "nothing"
            raise GraphSpecError(f"product kind must be one of {sorted(PRODUCTS)}, got {got!r}")
        left, nxt = _parse(tokens, pos + 2, False)
        right, end = _parse(tokens, nxt, top)
        return PRODUCTS[tokens[pos + 1]](left, right), end
    if pos + 1 >= len(tokens):
        raise GraphSpecError(f"{kind}: missing size")
    arg = tokens[pos + 1]
    try:
        if kind == "bipartite":
            parts = arg.split(",")
            if len(parts) != 2:
                raise GraphSpecError(f"bipartite: expected M,N, got {arg!r}")
            return gr.complete_bipartite(_int(parts[0], "bipartite"), _int(parts[1], "bipartite")), pos + 2
        if kind in _SIMPLE:
            return _SIMPLE[kind](_int(arg, kind)), pos + 2
    except GraphSpecError:
        raise
    except ValueError as exc:
        raise GraphSpecError(f"{kind}:{arg}: {exc}") from None
    raise GraphSpecError(f"unknown graph kind {kind!r}")


def parse_graph_spec(text: str) -> Graph:
    tokens = text.strip().split(":")
    g, end = _parse(tokens, 0, True)
    if end != len(tokens):
        raise GraphSpecError(f"trailing tokens: {':'.join(tokens[end:])!r}")
    return g
