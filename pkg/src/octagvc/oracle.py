"""Brute-force reference solvers and reproducible instance generators.

These are deliberately naive and only meant for small graphs; the test suite
checks the compression solver against them.

Generator algorithm (pinned, so fixtures never drift): ``random.Random(seed)``
(Mersenne Twister, stable across platforms for integer seeds).  Without a
planted transversal, pairs ``(u, v)``, ``u < v``, are visited in lexicographic
order and kept when ``rng.random() < p``.  With ``planted_oct = q``, first
``rng.sample(range(n), q)`` picks the planted vertices, then every other vertex
draws its side (``rng.random() < 0.5`` means right), then candidate pairs are
all lexicographic pairs except those joining two non-planted vertices on the
same side.  With an exact edge count ``m`` the edges are
``rng.sample(candidates, m)``; otherwise each candidate is kept when
``rng.random() < p``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .graph import Graph, from_edge_list, is_oct

__all__ = [
    "GenSpec",
    "random_graph",
    "brute_oct",
    "brute_min_oct",
    "brute_min_vc",
    "brute_disjoint",
    "brute_max_matching_size",
    "complete_graph",
    "cycle_graph",
    "petersen_graph",
]

MAX_VC_VERTICES = 24


def brute_oct(g: Graph, k: int) -> frozenset[int] | None:
    """Minimum OCT if it has at most ``k`` vertices, else None.

    Candidates are tried by increasing size, lexicographically within a size.
    """
    for size in range(min(k, g.n) + 1):
        for cand in combinations(range(g.n), size):
            if is_oct(g, cand):
                return frozenset(cand)
    return None


def brute_min_oct(g: Graph) -> frozenset[int]:
    result = brute_oct(g, g.n)
    assert result is not None
    return result


def _cover_masks(g: Graph) -> np.ndarray:
    # boolean table over all 2^n vertex subsets: is it a vertex cover?
    if g.n > MAX_VC_VERTICES:
        raise ValueError(f"brute force vertex cover limited to {MAX_VC_VERTICES} vertices")
    masks = np.arange(1 << g.n, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for u, v in g.edges:
        ok &= ((masks >> u) | (masks >> v)) & 1 == 1
    return ok


def brute_min_vc(g: Graph) -> frozenset[int]:
    """Minimum vertex cover by exhaustive search; lexicographically first among ties."""
    ok = _cover_masks(g)
    masks = np.flatnonzero(ok)
    sizes = np.bitwise_count(masks)
    best = sizes.min()
    winners = [
        tuple(v for v in range(g.n) if (int(x) >> v) & 1) for x in masks[sizes == best]
    ]
    return frozenset(min(winners))


def brute_disjoint(h: Graph, t) -> frozenset[int] | None:
    """Smallest OCT of ``h`` avoiding ``t`` with at most ``|t| - 1`` vertices."""
    t = frozenset(t)
    rest = [v for v in range(h.n) if v not in t]
    for size in range(len(t)):
        for cand in combinations(rest, size):
            if is_oct(h, cand):
                return frozenset(cand)
    return None


def brute_max_matching_size(g: Graph) -> int:
    """Largest set of pairwise disjoint edges, by exhaustive search over edge subsets."""
    edges = g.sorted_edges()
    best = 0

    def extend(start: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not (used >> u) & 1 and not (used >> v) & 1:
                extend(i + 1, used | (1 << u) | (1 << v), size + 1)

    extend(0, 0, 0)
    return best


@dataclass(frozen=True)
class GenSpec:
    n: int
    edge_probability: Fraction | float = Fraction(1, 2)
    planted_oct: int | None = None
    seed: int = 0
    edge_count: int | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0 <= self.edge_probability <= 1:
            raise ValueError(f"edge probability {self.edge_probability} outside [0, 1]")
        if self.planted_oct is not None and not 0 <= self.planted_oct <= self.n:
            raise ValueError(f"planted_oct must lie in [0, n], got {self.planted_oct}")
        if self.edge_count is not None and self.edge_count < 0:
            raise ValueError("edge_count must be non-negative")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def random_graph(spec: GenSpec) -> Graph:
    """Reproducible random graph; see the module docstring for the exact scheme."""
    rng = random.Random(spec.seed)
    n = spec.n
    p = float(spec.edge_probability)
    if spec.planted_oct is None:
        candidates = list(combinations(range(n), 2))
    else:
        planted = set(rng.sample(range(n), spec.planted_oct))
        side = {}
        for v in range(n):
            if v not in planted:
                side[v] = rng.random() < 0.5
        candidates = [
            (u, v)
            for u, v in combinations(range(n), 2)
            if u in planted or v in planted or side[u] != side[v]
        ]
    if spec.edge_count is not None:
        if spec.edge_count > len(candidates):
            raise ValueError(
                f"cannot place {spec.edge_count} edges, only {len(candidates)} allowed"
            )
        pairs = rng.sample(candidates, spec.edge_count)
    else:
        pairs = [e for e in candidates if rng.random() < p]
    return from_edge_list(n, pairs)


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)
