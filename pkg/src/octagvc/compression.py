"""Odd cycle transversal by iterative compression over the doubled graph.

The layers, innermost first:

* :func:`disjoint_compression` -- given an OCT ``T`` of ``H`` with ``H[T]``
  bipartite, look for an OCT of size at most ``|T| - 1`` avoiding ``T``.  For
  each of the ``2^|T|`` ways ``Y`` of putting one copy of every ``v in T`` into a
  cover of H², the rest of a smallest cover extending ``Y`` is forced (``W``,
  the neighbours of the copies left out) plus a minimum vertex cover ``Z`` of a
  bipartite remainder.  Vertices with both copies in the cover form ``T'``.
* :func:`compress` -- given an OCT ``S`` of size ``k + 1``, try every non-empty
  ``T ⊆ S`` inducing a bipartite graph and delete ``S - T`` up front.
* :func:`solve_oct` -- add vertices one at a time, compressing whenever the
  running solution reaches ``k + 1`` vertices.
"""
from __future__ import annotations

import os
from collections.abc import Iterable, Iterator
from concurrent.futures import Executor, ProcessPoolExecutor, as_completed
from contextlib import nullcontext
from dataclasses import dataclass, field

from .bipartite import FREE, hopcroft_karp, konig_cover
from .doubling import DoubledGraph
from .graph import Bipartition, Graph, GraphError, induced_subgraph, is_oct, two_coloring

__all__ = [
    "SideAssignment",
    "CompressionStats",
    "DisjointResult",
    "side_assignments",
    "step1_filter",
    "disjoint_compression",
    "compress",
    "solve_oct",
    "minimize_oct",
    "default_workers",
]

WORKERS_ENV = "OCTAGVC_WORKERS"
# below this many assignments a parallel split costs more than it saves
PARALLEL_MIN_ASSIGNMENTS = 256


def default_workers() -> int:
    """Worker count for parallel mode: ``$OCTAGVC_WORKERS`` or the CPU count."""
    value = os.environ.get(WORKERS_ENV)
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            raise ValueError(f"{WORKERS_ENV} must be an integer, got {value!r}") from None
    return os.cpu_count() or 1


@dataclass(frozen=True)
class SideAssignment:
    """One copy of each vertex of T chosen into the cover.

    ``choices[i] == 0`` puts the first copy of ``t_order[i]`` into Y, ``1`` the
    second copy.
    """

    t_order: tuple[int, ...]
    choices: tuple[int, ...]

    @classmethod
    def from_mask(cls, t_order: tuple[int, ...], mask: int) -> SideAssignment:
        return cls(t_order, tuple((mask >> i) & 1 for i in range(len(t_order))))

    @property
    def mask(self) -> int:
        return sum(bit << i for i, bit in enumerate(self.choices))

    def selected(self, n: int) -> frozenset[int]:
        """The set Y, in doubled-graph labels for a source graph of order ``n``."""
        return frozenset(v + n * c for v, c in zip(self.t_order, self.choices))

    def excluded(self, n: int) -> frozenset[int]:
        return frozenset(v + n * (1 - c) for v, c in zip(self.t_order, self.choices))


def side_assignments(t: Iterable[int]) -> Iterator[SideAssignment]:
    """All ``2^|t|`` side assignments in ascending bitmask order."""
    order = tuple(sorted(set(t)))
    for mask in range(1 << len(order)):
        yield SideAssignment.from_mask(order, mask)


def step1_filter(dg: DoubledGraph, y: SideAssignment) -> bool:
    """True iff Y covers every edge of the doubled graph inside ``T₁ ∪ T₂``."""
    n = dg.base_n
    inside = dg.copies(y.t_order, 1) | dg.copies(y.t_order, 2)
    chosen = y.selected(n)
    for a, b in dg.graph.edges:
        if a in inside and b in inside and a not in chosen and b not in chosen:
            return False
    return True


@dataclass
class CompressionStats:
    """Work counters; ``*_log`` keep one ``(set size, assignments)`` entry per call.

    ``failed_at`` is the last vertex of the prefix graph on which
    :func:`solve_oct` gave up, if it did.
    """

    assignments_enumerated: int = 0
    assignments_surviving_step1: int = 0
    matching_calls: int = 0
    subsets_of_S_tried: int = 0
    compress_calls: int = 0
    disjoint_log: list[tuple[int, int]] = field(default_factory=list)
    compress_log: list[tuple[int, int]] = field(default_factory=list)
    failed_at: int | None = None

    COUNTERS = (
        "assignments_enumerated",
        "assignments_surviving_step1",
        "matching_calls",
        "subsets_of_S_tried",
        "compress_calls",
    )

    def add_counts(self, other: CompressionStats) -> None:
        for name in self.COUNTERS:
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def snapshot(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in self.COUNTERS}

    def max_compress_assignments(self) -> int:
        return max((a for _, a in self.compress_log), default=0)


@dataclass(frozen=True)
class DisjointResult:
    """Outcome of :func:`disjoint_compression`.

    ``oct`` is None when no small disjoint OCT exists.  ``degenerate`` marks the
    case where ``H[T]`` itself is not bipartite, so nothing was enumerated.
    On success ``assignment`` is the winning Y and ``cover`` the cover X of H².
    """

    oct: frozenset[int] | None
    stats: CompressionStats
    degenerate: bool = False
    assignment: SideAssignment | None = None
    cover: frozenset[int] | None = None

    @property
    def found(self) -> bool:
        return self.oct is not None


class _Kernel:
    """Doubled-graph data shared by all T ⊆ S for one OCT ``S`` of ``g``.

    Works in the labels of ``g``: deleting ``S - T`` is implicit because those
    vertices never appear in B and are never touched.  B = V(g) - S is coloured
    by ``sides``; its first copies on the P side and second copies on the Q side
    form the left half of the bipartite graph H²[B₁ ∪ B₂].
    """

    def __init__(self, g: Graph, s: frozenset[int], sides: Bipartition):
        n = g.n
        self.n = n
        self.g_adj = g.adj
        in_b = bytearray(n)
        for v in range(n):
            if v not in s:
                in_b[v] = 1
        self.in_b = in_b
        self.b_size = n - len(s)
        adj: list[tuple[int, ...]] = [()] * (2 * n)
        alive = bytearray(2 * n)
        mate = [FREE] * (2 * n)
        is_left = bytearray(2 * n)
        for u in range(n):
            if not in_b[u]:
                continue
            nb = [w for w in g.adj[u] if in_b[w]]
            adj[u] = tuple(nb) + (u + n,)
            adj[u + n] = tuple(w + n for w in nb) + (u,)
            alive[u] = alive[u + n] = 1
            mate[u], mate[u + n] = u + n, u
            if u in sides.left:
                is_left[u] = 1
            else:
                is_left[u + n] = 1
        self.adj = adj
        self.alive = alive
        self.mate = mate
        self.is_left = is_left
        self.left = [x for x in range(2 * n) if is_left[x]]
        self.right = [x for x in range(2 * n) if alive[x] and not is_left[x]]

    def scan(self, t_order: tuple[int, ...], lo: int, hi: int, stats: CompressionStats):
        """Try assignments ``lo <= mask < hi``; return the first success or None.

        A success is ``(mask, t_prime, cover)``.
        """
        n = self.n
        size = len(t_order)
        budget = size - 1
        index = {v: i for i, v in enumerate(t_order)}
        t_nbrs = []
        b_first = []
        b_second = []
        for v in t_order:
            bits = 0
            for w in self.g_adj[v]:
                if w in index:
                    bits |= 1 << index[w]
            t_nbrs.append(bits)
            nb = [w for w in self.g_adj[v] if self.in_b[w]]
            b_first.append(nb)
            b_second.append([w + n for w in nb])
        adj, is_left = self.adj, self.is_left
        base_alive, base_mate = self.alive, self.mate

        for mask in range(lo, hi):
            stats.assignments_enumerated += 1
            # Y covers H²[T₁ ∪ T₂] iff T-neighbours always take opposite copies
            ok = True
            for i in range(size):
                nm = t_nbrs[i]
                if (mask >> i) & 1:
                    if nm & mask:
                        ok = False
                        break
                elif nm & mask != nm:
                    ok = False
                    break
            if not ok:
                continue
            stats.assignments_surviving_step1 += 1

            # W: B-copies adjacent to the copy of each T vertex left out of Y
            w_set = set()
            for i in range(size):
                w_set.update(b_second[i] if not (mask >> i) & 1 else b_first[i])
            alive = bytearray(base_alive)
            mate = base_mate.copy()
            for x in w_set:
                alive[x] = 0
            broken = 0
            roots = []
            for x in sorted(w_set):
                p = mate[x]
                if p == FREE:
                    continue
                broken += 1
                mate[x] = mate[p] = FREE
                if alive[p] and is_left[p]:
                    roots.append(p)
            # pairs with both copies in W are forced into T'
            if len(w_set) - broken > budget:
                continue
            stats.matching_calls += 1
            grown = hopcroft_karp(adj, sorted(roots), mate, alive)
            # |X| - h = |W| + |Z| - |B|, and |Z| = |B| - broken + grown
            t_size = len(w_set) - broken + grown
            if t_size > budget:
                continue
            z = konig_cover(adj, self.left, self.right, mate, alive)
            y = SideAssignment.from_mask(t_order, mask).selected(n)
            cover = frozenset(y | w_set | z)
            t_prime = frozenset(u for u in range(n) if u in cover and u + n in cover)
            h_size = size + self.b_size
            if len(t_prime) != t_size or len(cover) != h_size + len(t_prime):
                raise RuntimeError("cover accounting mismatch in disjoint compression")
            return mask, t_prime, cover
        return None

    def run(
        self,
        t_order: tuple[int, ...],
        stats: CompressionStats,
        pool: Executor | None = None,
        canonical: bool = True,
    ):
        total = 1 << len(t_order)
        before = stats.assignments_enumerated
        if pool is None or total < PARALLEL_MIN_ASSIGNMENTS:
            found = self.scan(t_order, 0, total, stats)
        else:
            found = self._run_parallel(t_order, total, stats, pool, canonical)
        stats.disjoint_log.append((len(t_order), stats.assignments_enumerated - before))
        return found

    def _run_parallel(self, t_order, total, stats, pool, canonical):
        workers = getattr(pool, "_max_workers", None) or 1
        chunks = min(total, 4 * workers)
        step = -(-total // chunks)
        futures = [
            pool.submit(_scan_chunk, self, t_order, lo, min(lo + step, total))
            for lo in range(0, total, step)
        ]
        found = None
        ordered = futures if canonical else as_completed(futures)
        for fut in ordered:
            hit, local = fut.result()
            stats.add_counts(local)
            if hit is not None:
                found = hit
                break
        for fut in futures:
            fut.cancel()
        return found


def _scan_chunk(kernel: _Kernel, t_order, lo, hi):
    local = CompressionStats()
    return kernel.scan(t_order, lo, hi, local), local


def _bipartite_on(g: Graph, vertices: Iterable[int]) -> bool:
    members = set(vertices)
    color: dict[int, int] = {}
    for root in sorted(members):
        if root in color:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in members:
                    continue
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _check_vertices(g: Graph, vs: frozenset[int]) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph of order {g.n}")


def disjoint_compression(
    h: Graph,
    t: Iterable[int],
    *,
    stats: CompressionStats | None = None,
    pool: Executor | None = None,
    canonical: bool = True,
) -> DisjointResult:
    """Find an OCT of ``h`` of size at most ``|t| - 1`` that avoids ``t``.

    ``t`` must be an OCT of ``h``.  Returns the first such set in ascending
    side-assignment order, with the cover of H² it came from.
    """
    t = frozenset(t)
    _check_vertices(h, t)
    stats = CompressionStats() if stats is None else stats
    sides = two_coloring(h, t)
    if not isinstance(sides, Bipartition):
        raise GraphError("t is not an odd cycle transversal of h")
    if not _bipartite_on(h, t):
        return DisjointResult(None, stats, degenerate=True)
    order = tuple(sorted(t))
    found = _Kernel(h, t, sides).run(order, stats, pool, canonical)
    if found is None:
        return DisjointResult(None, stats)
    mask, t_prime, cover = found
    if t_prime & t or len(t_prime) > len(t) - 1 or not is_oct(h, t_prime):
        raise RuntimeError(f"disjoint compression produced an invalid set {sorted(t_prime)}")
    return DisjointResult(t_prime, stats, False, SideAssignment.from_mask(order, mask), cover)


def compress(
    g: Graph,
    s: Iterable[int],
    k: int,
    *,
    stats: CompressionStats | None = None,
    pool: Executor | None = None,
    canonical: bool = True,
) -> frozenset[int] | None:
    """Shrink an OCT ``s`` of size ``k + 1`` to one of size at most ``k``.

    Tries every non-empty ``T ⊆ s`` with ``g[T]`` bipartite, in ascending
    bitmask order over sorted ``s``, keeping ``s - T`` and looking for a small
    OCT of ``g - (s - T)`` disjoint from ``T``.  Returns None if none exists.
    """
    s = frozenset(s)
    _check_vertices(g, s)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    sides = two_coloring(g, s)
    if not isinstance(sides, Bipartition):
        raise GraphError("s is not an odd cycle transversal of g")
    if len(s) <= k:
        return s
    if len(s) > k + 1:
        raise ValueError(f"compress needs |s| <= k + 1, got |s|={len(s)}, k={k}")
    stats = CompressionStats() if stats is None else stats
    stats.compress_calls += 1
    before = stats.assignments_enumerated
    kernel = _Kernel(g, s, sides)
    order = sorted(s)
    result = None
    for subset in range(1, 1 << len(order)):
        t_order = tuple(v for i, v in enumerate(order) if (subset >> i) & 1)
        if not _bipartite_on(g, t_order):
            continue
        stats.subsets_of_S_tried += 1
        found = kernel.run(t_order, stats, pool, canonical)
        if found is not None:
            result = found[1] | (s - set(t_order))
            break
    stats.compress_log.append((len(s), stats.assignments_enumerated - before))
    if result is not None and (len(result) > k or not is_oct(g, result)):
        raise RuntimeError(f"compression produced an invalid OCT {sorted(result)}")
    return result


def solve_oct(
    g: Graph,
    k: int,
    *,
    stats: CompressionStats | None = None,
    workers: int = 1,
    canonical: bool = True,
) -> frozenset[int] | None:
    """An OCT of ``g`` with at most ``k`` vertices, or None if there is none.

    Vertices are added in ascending order; each time the running solution
    grows to ``k + 1`` it is compressed on the current prefix graph.  A failed
    compression proves the prefix, hence ``g``, needs more than ``k`` vertices.
    ``workers > 1`` spreads side assignments over a process pool; with
    ``canonical`` the answer is identical to the sequential one.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    stats = CompressionStats() if stats is None else stats
    if k == 0:
        if _bipartite_on(g, range(g.n)):
            return frozenset()
        stats.failed_at = g.n - 1
        return None
    if g.n <= k + 1:
        result = frozenset(range(min(g.n, k)))
        if not is_oct(g, result):
            raise RuntimeError("trivial solution failed verification")
        return result

    pool_cm = ProcessPoolExecutor(max_workers=workers) if workers > 1 else nullcontext()
    with pool_cm as pool:
        s = frozenset(range(k))
        for i in range(k, g.n):
            s = s | {i}
            if len(s) <= k:
                continue
            prefix, _ = induced_subgraph(g, range(i + 1))
            s = compress(prefix, s, k, stats=stats, pool=pool, canonical=canonical)
            if s is None:
                stats.failed_at = i
                return None
    if len(s) > k or not is_oct(g, s):
        raise RuntimeError(f"iterative compression produced an invalid OCT {sorted(s)}")
    return s


def minimize_oct(g: Graph, **kwargs) -> frozenset[int]:
    """A minimum odd cycle transversal, via ``solve_oct`` with k = 0, 1, 2, ..."""
    for k in range(g.n + 1):
        result = solve_oct(g, k, **kwargs)
        if result is not None:
            return result
    raise RuntimeError("unreachable: the full vertex set is always an OCT")
