"""Maximum matching and minimum vertex cover in bipartite graphs.

The public functions take a :class:`~octagvc.graph.Graph` plus a
:class:`~octagvc.graph.Bipartition`.  The compression step in
:mod:`octagvc.compression` calls the array-level kernels directly, because it
solves thousands of closely related instances and can warm-start each one.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Sequence

from .graph import Bipartition, Graph, GraphError

__all__ = ["max_matching", "min_vertex_cover", "hopcroft_karp", "konig_cover"]

FREE = -1


def hopcroft_karp(
    adj: Sequence[Sequence[int]],
    roots: Sequence[int],
    mate: list[int],
    alive: Sequence[int] | None = None,
) -> int:
    """Grow ``mate`` to a maximum matching; return the number of augmentations.

    ``adj`` lists, for each left vertex, its right neighbours.  ``roots`` must
    contain every left vertex that is free in the starting matching, in the order
    they should be tried.  ``mate`` is indexed by vertex id for both sides and
    updated in place.  Vertices with ``alive[v] == 0`` are treated as deleted.
    """
    free = [u for u in roots if mate[u] == FREE and (alive is None or alive[u])]
    grown = 0
    while free:
        # layered BFS from all free left vertices
        dist = {u: 0 for u in free}
        queue = deque(free)
        found = False
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for v in adj[u]:
                if alive is not None and not alive[v]:
                    continue
                w = mate[v]
                if w == FREE:
                    found = True
                elif w not in dist:
                    dist[w] = du
                    queue.append(w)
        if not found:
            break
        for root in free:
            if _augment(root, adj, mate, alive, dist):
                grown += 1
        free = [u for u in free if mate[u] == FREE]
    return grown


def _augment(root, adj, mate, alive, dist) -> bool:
    # iterative DFS along the BFS layers; dead ends are dropped from dist
    stack = [root]
    chosen: list[int] = []
    cursor = [0]
    while stack:
        u = stack[-1]
        nbrs = adj[u]
        i = cursor[-1]
        descended = False
        while i < len(nbrs):
            v = nbrs[i]
            i += 1
            if alive is not None and not alive[v]:
                continue
            w = mate[v]
            if w == FREE:
                chosen.append(v)
                for a, b in zip(stack, chosen):
                    mate[a] = b
                    mate[b] = a
                for u2 in stack:
                    dist.pop(u2, None)
                return True
            if dist.get(w) == dist[u] + 1:
                cursor[-1] = i
                chosen.append(v)
                stack.append(w)
                cursor.append(0)
                descended = True
                break
        if not descended:
            dist.pop(u, None)
            stack.pop()
            cursor.pop()
            if chosen:
                chosen.pop()
    return False


def konig_cover(
    adj: Sequence[Sequence[int]],
    left: Sequence[int],
    right: Sequence[int],
    mate: Sequence[int],
    alive: Sequence[int] | None = None,
) -> set[int]:
    """Minimum vertex cover from a maximum matching.

    Cover = (left not reachable) + (right reachable), reachability along
    alternating paths from the free left vertices.
    """
    reached = set()
    queue = deque()
    for u in left:
        if (alive is None or alive[u]) and mate[u] == FREE:
            reached.add(u)
            queue.append(u)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in reached or (alive is not None and not alive[v]):
                continue
            reached.add(v)
            w = mate[v]
            if w != FREE and w not in reached:
                reached.add(w)
                queue.append(w)
    cover = {u for u in left if (alive is None or alive[u]) and u not in reached}
    cover.update(v for v in right if (alive is None or alive[v]) and v in reached)
    return cover


def _setup(g: Graph, sides: Bipartition):
    try:
        sides.validate(g)
    except GraphError as exc:
        raise GraphError(f"not a bipartition of the graph: {exc}") from None
    left = sorted(sides.left)
    adj: list[Sequence[int]] = [()] * g.n
    for u in left:
        adj[u] = g.adj[u]
    mate = [FREE] * g.n
    hopcroft_karp(adj, left, mate)
    return left, adj, mate


def max_matching(g: Graph, sides: Bipartition) -> frozenset[tuple[int, int]]:
    """Maximum-cardinality matching as a set of normalized edges."""
    left, _, mate = _setup(g, sides)
    return frozenset(
        (min(u, mate[u]), max(u, mate[u])) for u in left if mate[u] != FREE
    )


def min_vertex_cover(g: Graph, sides: Bipartition) -> frozenset[int]:
    """Minimum vertex cover via König's theorem.

    Deterministic for a fixed graph and bipartition; isolated vertices are
    never included.
    """
    left, adj, mate = _setup(g, sides)
    return frozenset(konig_cover(adj, left, sorted(sides.right), mate))
