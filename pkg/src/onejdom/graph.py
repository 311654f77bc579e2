"""Core graph container, edge-list serialization, and basic predicates.

Vertices are the dense ids 0..n-1. Graphs are simple and undirected, and
immutable once constructed, so they can be shared freely between solvers
and concurrent tasks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError, PreconditionError


class Graph:
    """Simple undirected graph with per-vertex sorted neighbor lists."""

    __slots__ = ("n", "m", "_nbrs", "_nbr_sets", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbr_sets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbr_sets[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbr_sets[u].add(v)
            nbr_sets[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self._nbr_sets = tuple(frozenset(s) for s in nbr_sets)
        self._nbrs = tuple(tuple(sorted(s)) for s in nbr_sets)
        self._masks: tuple[int, ...] | None = None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(t) for t in self._nbrs]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once, as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self._nbrs[u]:
                if u < v:
                    yield (u, v)

    def neighbor_masks(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks; computed once and cached."""
        if self._masks is None:
            masks = []
            for v in range(self.n):
                mask = 0
                for u in self._nbrs[v]:
                    mask |= 1 << u
                masks.append(mask)
            self._masks = tuple(masks)
        return self._masks

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._nbrs == other._nbrs

    __hash__ = None  # mutable-free but identity semantics are not wanted

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class SplitPartition:
    """A (clique, independent set) bipartition of a split graph's vertices."""

    clique: frozenset[int]
    independent: frozenset[int]


def validate_split_partition(g: Graph, part: SplitPartition) -> None:
    """Raise PreconditionError unless part is a valid split of g."""
    k, s = part.clique, part.independent
    if k & s:
        raise PreconditionError("clique and independent set overlap")
    if k | s != frozenset(range(g.n)):
        raise PreconditionError("partition does not cover all vertices")
    kl = sorted(k)
    for i, u in enumerate(kl):
        for v in kl[i + 1:]:
            if not g.has_edge(u, v):
                raise PreconditionError(f"clique side misses edge ({u}, {v})")
    sl = sorted(s)
    for i, u in enumerate(sl):
        for v in sl[i + 1:]:
            if g.has_edge(u, v):
                raise PreconditionError(f"independent side contains edge ({u}, {v})")


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse the edge-list format: a header line "n m" followed by m lines "u v".

    Each malformed input raises ParseError naming the offending line.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    numbered = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    numbered = [(i, ln) for i, ln in numbered if ln]
    if not numbered:
        raise ParseError("empty input, expected header 'n m'")
    hline, header = numbered[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be two integers 'n m'", hline)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must be two integers 'n m'", hline) from None
    if n < 0 or m < 0:
        raise ParseError("header counts must be nonnegative", hline)
    body = numbered[1:]
    if len(body) < m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}")
    if len(body) > m:
        raise ParseError("unexpected extra line", body[m][0])

    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, ln in body:
        toks = ln.split()
        if len(toks) != 2:
            raise ParseError(f"malformed edge line {ln!r}", lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"malformed edge line {ln!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range in edge ({u}, {v})", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list; edges are emitted sorted for stable diffs."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    """True iff g is connected with exactly n-1 edges."""
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)
