"""Text renderings of a HasseGraph. Output is a pure function of the graph."""
from __future__ import annotations

import json

from .hasse import HasseGraph

EMPTY_LABEL = "ε"


def _node(bits):
    return bits if bits else EMPTY_LABEL


def to_edge_list(g: HasseGraph) -> str:
    return "".join(f"{a} {b}\n" for a, b in g.edge_strings())


def to_dot(g: HasseGraph) -> str:
    p = g.params
    lines = [f'digraph "hasse_n{p.n}_h{p.h}" {{', "  rankdir=BT;"]
    for v in g.vertices:
        name = _node(v)
        lines.append(f'  "{name}" [label="{name}"];')
    for a, b in g.edge_strings():
        lines.append(f'  "{_node(a)}" -> "{_node(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: HasseGraph) -> str:
    doc = {
        "n": g.params.n,
        "h": g.params.h,
        "vertices": list(g.vertices),
        "edges": [[u, w] for u, w in g.edges],
    }
    return json.dumps(doc, ensure_ascii=False) + "\n"


FORMATS = {"dot": to_dot, "edges": to_edge_list, "json": to_json}
