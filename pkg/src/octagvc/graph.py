"""Simple undirected graphs on dense integer vertices.

Vertices are always ``0..n-1``; external labels are handled in :mod:`octagvc.io`.
A :class:`Graph` is immutable once built and can be shared freely.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field

__all__ = [
    "Graph",
    "GraphError",
    "Bipartition",
    "OddCycleWitness",
    "from_edge_list",
    "induced_subgraph",
    "two_coloring",
    "is_bipartite",
    "is_oct",
]


class GraphError(ValueError):
    """Invalid graph input. ``position`` is the index of the offending pair, if any."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def check(self) -> None:
        """Raise :class:`GraphError` if the edge set and adjacency disagree."""
        if len(self.adj) != self.n:
            raise GraphError("adjacency length differs from n")
        seen = set()
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v == u or not 0 <= v < self.n:
                    raise GraphError(f"bad neighbour {v} of {u}")
                seen.add((min(u, v), max(u, v)))
        if seen != self.edges:
            raise GraphError("adjacency and edge set disagree")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {(u, v)} not normalized or out of range")


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices, collapsing duplicate edges.

    Self-loops and out-of-range endpoints raise :class:`GraphError`, carrying the
    position of the offending pair.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    edges = set()
    for pos, (u, v) in enumerate(pairs):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair #{pos} {(u, v)} out of range for n={n}", pos)
        if u == v:
            raise GraphError(f"pair #{pos} is a self-loop on {u}", pos)
        edges.add((u, v) if u < v else (v, u))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(n, frozenset(edges), adj)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``keep``, relabelled in ascending original order.

    Returns the new graph and the old -> new label map.
    """
    order = sorted(set(keep))
    for v in order:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph of order {g.n}")
    relabel = {v: i for i, v in enumerate(order)}
    pairs = [
        (relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel
    ]
    return from_edge_list(len(order), pairs), relabel


@dataclass(frozen=True)
class Bipartition:
    """Two-colouring witness: ``left`` (P) and ``right`` (Q)."""

    left: frozenset[int]
    right: frozenset[int]

    def vertices(self) -> frozenset[int]:
        return self.left | self.right

    def side_of(self, v: int) -> int:
        """0 for left, 1 for right."""
        if v in self.left:
            return 0
        if v in self.right:
            return 1
        raise KeyError(v)

    def swapped(self) -> Bipartition:
        return Bipartition(self.right, self.left)

    def validate(self, g: Graph, vertices: Iterable[int] | None = None) -> None:
        """Check this certifies ``g`` restricted to ``vertices`` (default: all of g)."""
        expected = frozenset(range(g.n) if vertices is None else vertices)
        if self.left & self.right:
            raise GraphError(f"sides overlap on {sorted(self.left & self.right)}")
        if self.vertices() != expected:
            raise GraphError("sides do not partition the certified vertex set")
        for u, v in g.edges:
            if u in expected and v in expected:
                if (u in self.left) == (v in self.left):
                    raise GraphError(f"edge {(u, v)} inside one side")

    def is_valid(self, g: Graph, vertices: Iterable[int] | None = None) -> bool:
        try:
            self.validate(g, vertices)
        except GraphError:
            return False
        return True


@dataclass(frozen=True)
class OddCycleWitness:
    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    def validate(self, g: Graph, excluded: Iterable[int] = ()) -> None:
        c = self.cycle
        if len(c) % 2 == 0:
            raise GraphError(f"cycle of even length {len(c)}")
        if len(set(c)) != len(c):
            raise GraphError("cycle repeats a vertex")
        if set(c) & set(excluded):
            raise GraphError("cycle uses an excluded vertex")
        for i, u in enumerate(c):
            v = c[(i + 1) % len(c)]
            if not g.has_edge(u, v):
                raise GraphError(f"{u} and {v} are not adjacent")

    def is_valid(self, g: Graph, excluded: Iterable[int] = ()) -> bool:
        try:
            self.validate(g, excluded)
        except GraphError:
            return False
        return True


def _odd_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # u, v adjacent with equal depth parity in the BFS forest
    up, vp = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        up.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        vp.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        up.append(a)
        vp.append(b)
    # up ends and vp ends at the common ancestor
    return tuple(up + vp[-2::-1])


def two_coloring(g: Graph, excluded: Iterable[int] = ()) -> Bipartition | OddCycleWitness:
    """BFS 2-colouring of ``g`` minus ``excluded``.

    Each component is rooted at its lowest vertex, which goes to the left side.
    Returns an odd cycle instead when the remaining graph is not bipartite.
    """
    dead = set(excluded)
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    adj = g.adj
    for root in range(g.n):
        if color[root] != -1 or root in dead:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            cu = color[u]
            for w in adj[u]:
                if w in dead:
                    continue
                if color[w] == -1:
                    color[w] = 1 - cu
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == cu:
                    return OddCycleWitness(_odd_cycle(u, w, parent, depth))
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    right = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(left, right)


def is_bipartite(g: Graph, excluded: Iterable[int] = ()) -> bool:
    return isinstance(two_coloring(g, excluded), Bipartition)


def is_oct(g: Graph, s: Iterable[int]) -> bool:
    """True iff deleting ``s`` from ``g`` leaves a bipartite graph."""
    s = set(s)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph of order {g.n}")
    return is_bipartite(g, s)
