"""Hasse diagram of the independent subsets of P_n^(h) under inclusion."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .counting import PathPower
from .enumeration import ENUMERATION_CAP, enumerate_independent, ones


def covers(lower: str, upper: str) -> bool:
    """True iff upper is lower plus exactly one more element."""
    if len(lower) != len(upper):
        raise ValueError(f"length mismatch: {len(lower)} vs {len(upper)}")
    extra = 0
    for a, b in zip(lower, upper):
        if a == "1" and b == "0":
            return False
        if a == "0" and b == "1":
            extra += 1
    return extra == 1


@dataclass(frozen=True)
class HasseGraph:
    """Vertices in canonical order; edges are (lower index, upper index), sorted."""

    params: PathPower
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[int, int], ...]

    def edge_strings(self):
        for u, w in self.edges:
            yield self.vertices[u], self.vertices[w]


def build_hasse(p: PathPower, cap: int = ENUMERATION_CAP) -> HasseGraph:
    vertices = enumerate_independent(p, cap)
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for w, bits in enumerate(vertices):
        # every subset of an independent set is independent, so each deletion is a vertex
        for pos in ones(bits):
            lower = bits[: pos - 1] + "0" + bits[pos:]
            edges.append((index[lower], w))
    edges.sort()
    return HasseGraph(p, tuple(vertices), tuple(edges))


def edge_count(g: HasseGraph) -> int:
    return len(g.edges)


def down_degrees(g: HasseGraph) -> List[int]:
    deg = [0] * len(g.vertices)
    for _, w in g.edges:
        deg[w] += 1
    return deg


def up_degrees(g: HasseGraph) -> List[int]:
    deg = [0] * len(g.vertices)
    for u, _ in g.edges:
        deg[u] += 1
    return deg
