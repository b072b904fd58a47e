"""The doubled graph G² and the OCT <-> vertex cover correspondence.

Vertex ``v`` of the source graph has copies ``v`` (first) and ``v + n``
(second) in G².  G² holds both copies of every source edge plus one pairing
edge ``{v, v + n}`` per source vertex.  An OCT ``S`` with a bipartition
``P, Q`` of ``G - S`` gives the cover ``V(G²) - (P₁ ∪ Q₂)`` of size ``n + |S|``,
and any cover of G² reads back as an OCT (vertices with both copies covered).
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Bipartition, Graph, GraphError, from_edge_list

__all__ = [
    "DoubledGraph",
    "doubled_graph",
    "cover_from_oct",
    "oct_from_cover",
    "is_vertex_cover",
]


@dataclass(frozen=True)
class DoubledGraph:
    base_n: int
    graph: Graph

    def first(self, v: int) -> int:
        return v

    def second(self, v: int) -> int:
        return v + self.base_n

    def source(self, x: int) -> int:
        """Source vertex of doubled vertex ``x``."""
        return x - self.base_n if x >= self.base_n else x

    def copies(self, vs: Iterable[int], which: int) -> frozenset[int]:
        """``S₁`` (which=1) or ``S₂`` (which=2) for a source set ``S``."""
        shift = 0 if which == 1 else self.base_n
        return frozenset(v + shift for v in vs)

    def pairing(self) -> list[tuple[int, int]]:
        """The pairing edges; a perfect matching of :attr:`graph`."""
        return [(v, v + self.base_n) for v in range(self.base_n)]


def doubled_graph(g: Graph) -> DoubledGraph:
    n = g.n
    pairs = [(v, v + n) for v in range(n)]
    for u, v in g.edges:
        pairs.append((u, v))
        pairs.append((u + n, v + n))
    return DoubledGraph(n, from_edge_list(2 * n, pairs))


def is_vertex_cover(g: Graph, x: Iterable[int]) -> bool:
    x = set(x)
    return all(u in x or v in x for u, v in g.edges)


def cover_from_oct(
    g: Graph, s: Iterable[int], pq: Bipartition, swap: bool = False
) -> frozenset[int]:
    """Vertex cover of size ``n + |s|`` in G² built from an OCT and its bipartition.

    By default returns ``V(G²) - (P₁ ∪ Q₂)``; with ``swap`` the mirror cover
    ``V(G²) - (P₂ ∪ Q₁)``.
    """
    s = frozenset(s)
    n = g.n
    rest = frozenset(range(n)) - s
    try:
        pq.validate(g, rest)
    except GraphError as exc:
        raise GraphError(f"not a bipartition of G - S: {exc}") from None
    p, q = (pq.right, pq.left) if swap else (pq.left, pq.right)
    independent = {v for v in p} | {v + n for v in q}
    return frozenset(x for x in range(2 * n) if x not in independent)


def oct_from_cover(dg: DoubledGraph, x: Iterable[int]) -> tuple[frozenset[int], Bipartition]:
    """Read an OCT and a bipartition of the remainder off a cover of G².

    The cover need not be minimum.
    """
    x = frozenset(x)
    if not is_vertex_cover(dg.graph, x):
        raise GraphError("not a vertex cover of the doubled graph")
    n = dg.base_n
    s = frozenset(v for v in range(n) if v in x and v + n in x)
    p = frozenset(v for v in range(n) if v not in x)
    q = frozenset(v for v in range(n) if v + n not in x)
    return s, Bipartition(p, q)
