"""Graph-class recognition: chordality and split graphs.

Chordality runs Lex-BFS and verifies the reversed visit order as a perfect
elimination ordering; when verification fails, a chordless cycle of length
at least four is extracted as the witness.  Split recognition uses the
degree-sequence threshold test, which yields the partition directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import InternalContradictionError
from .graph import Graph, SplitPartition, validate_split_partition


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    # elimination order (first vertex eliminated first) when chordal
    peo: tuple[int, ...] | None
    # vertices of a chordless cycle, length >= 4, when not chordal
    cycle: tuple[int, ...] | None


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS visit order via partition refinement.

    Ties are broken toward the lowest vertex id, so the order is a pure
    function of the graph.
    """
    if g.n == 0:
        return []
    classes: list[list[int]] = [list(range(g.n))]
    order: list[int] = []
    while classes:
        head = classes[0]
        v = head.pop(0)
        if not head:
            classes.pop(0)
        order.append(v)
        nbrs = g.neighbor_set(v)
        refined: list[list[int]] = []
        for cls in classes:
            inside = [x for x in cls if x in nbrs]
            outside = [x for x in cls if x not in nbrs]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        classes = refined
    return order


def _verify_peo(g: Graph, elim: list[int]) -> bool:
    """Check the perfect-elimination property of an elimination order."""
    pos = {v: i for i, v in enumerate(elim)}
    pending: dict[int, list[int]] = {v: [] for v in elim}
    for v in elim:
        for w in pending[v]:
            if not g.has_edge(v, w):
                return False
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if later:
            parent = min(later, key=pos.__getitem__)
            for w in later:
                if w != parent:
                    pending[parent].append(w)
    return True


def _bfs_path_avoiding(g: Graph, src: int, dst: int, blocked: frozenset[int]) -> list[int] | None:
    """Shortest src-dst path in g minus `blocked` (src, dst assumed unblocked)."""
    prev = {src: -1}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = [v]
            while prev[path[-1]] != -1:
                path.append(prev[path[-1]])
            return path[::-1]
        for u in g.neighbors(v):
            if u not in prev and u not in blocked:
                prev[u] = v
                queue.append(u)
    return None


def find_chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    """Return some chordless cycle of length >= 4, or None if there is none.

    For each vertex v and non-adjacent pair (u, w) of its neighbors, a
    shortest u-w path avoiding the rest of N[v] closes into a chordless
    cycle through v; any non-chordal graph contains such a configuration.
    """
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if len(nbrs) < 2:
            continue
        closed = g.neighbor_set(v) | {v}
        for u, w in combinations(nbrs, 2):
            if g.has_edge(u, w):
                continue
            blocked = frozenset(closed - {u, w})
            path = _bfs_path_avoiding(g, u, w, blocked)
            if path is not None:
                return (v, *path)
    return None


def chordality_check(g: Graph) -> ChordalityResult:
    """Decide chordality; return a PEO or a chordless-cycle witness."""
    order = lex_bfs(g)
    elim = order[::-1]
    if _verify_peo(g, elim):
        return ChordalityResult(True, tuple(elim), None)
    cycle = find_chordless_cycle(g)
    if cycle is None:
        raise InternalContradictionError(
            "elimination check failed but no chordless cycle was found")
    return ChordalityResult(False, None, cycle)


def split_recognition(g: Graph) -> SplitPartition | None:
    """Degree-sequence split test; returns the (K, S) partition or None.

    With degrees sorted descending, G is split iff
    sum(d_1..d_h) == h(h-1) + sum(d_{h+1}..d_n) for the threshold index
    h = max{i : d_i >= i-1}.  The h highest-degree vertices then induce the
    clique.  Vertices tied at the boundary (eligible for either side) land
    in K because the sort breaks degree ties by lowest id.
    """
    n = g.n
    if n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    d = [g.degree(v) for v in order]
    h = 0
    for i in range(1, n + 1):
        if d[i - 1] >= i - 1:
            h = i
    if sum(d[:h]) != h * (h - 1) + sum(d[h:]):
        return None
    part = SplitPartition(frozenset(order[:h]), frozenset(order[h:]))
    try:
        validate_split_partition(g, part)
    except ValueError as exc:  # cannot happen when the threshold test passes
        raise InternalContradictionError(
            f"degree test accepted a non-split partition: {exc}") from exc
    return part
