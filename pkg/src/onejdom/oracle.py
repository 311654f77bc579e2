"""Ground-truth exact solvers and the (1,j)-set verifier.

Everything here is deliberately brute force: subsets are enumerated in
increasing cardinality (so the first hit is a minimum and, within a
cardinality, lexicographically smallest), and the branch-and-bound engine
exists only to push exact answers a little past where enumeration stops.
Other solvers in the package are validated against this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil
from typing import Iterable

from .errors import PreconditionError, SizeGuardError
from .graph import Graph

ENUM_GUARD = 20
BNB_GUARD = 36

_ENGINE_ALIASES = {
    "enumeration": "enumeration",
    "brute": "enumeration",
    "branch_and_bound": "branch_and_bound",
    "bnb": "branch_and_bound",
}


@dataclass(frozen=True)
class Witness:
    """An explicit vertex set certifying a reported domination value."""

    vertices: frozenset[int]

    @property
    def cardinality(self) -> int:
        return len(self.vertices)

    def sorted(self) -> list[int]:
        return sorted(self.vertices)


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    undominated: tuple[int, ...]
    overdominated: tuple[int, ...]


def verify_1j_set(g: Graph, vertices: Iterable[int], j: int) -> VerifyReport:
    """Check the (1,j) condition for every vertex outside the given set."""
    if j < 1:
        raise PreconditionError("j must be a positive integer")
    dset = frozenset(vertices)
    for v in dset:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex id {v} out of range")
    undominated: list[int] = []
    overdominated: list[int] = []
    for v in range(g.n):
        if v in dset:
            continue
        c = len(dset & g.neighbor_set(v))
        if c == 0:
            undominated.append(v)
        elif c > j:
            overdominated.append(v)
    return VerifyReport(not undominated and not overdominated,
                        tuple(undominated), tuple(overdominated))


def _check_guard(n: int, limit: int, force: bool, what: str) -> None:
    if n > limit and not force:
        raise SizeGuardError(
            f"{what} guards at n <= {limit} (got n = {n}); pass force=True to override")


def _enum_min_1j(g: Graph, j: int, budget: int | None) -> tuple[int, frozenset[int]] | None:
    n = g.n
    if n == 0:
        return 0, frozenset()
    masks = g.neighbor_masks()
    full = (1 << n) - 1
    bits = [1 << v for v in range(n)]
    top = n if budget is None else min(budget, n)
    ids = range(n)
    for k in range(top + 1):
        for combo in combinations(ids, k):
            dmask = 0
            cover = 0
            for v in combo:
                dmask |= bits[v]
                cover |= masks[v]
            if cover | dmask != full:
                continue  # some unselected vertex has no selected neighbor
            rem = full & ~dmask
            ok = True
            while rem:
                low = rem & -rem
                v = low.bit_length() - 1
                if (masks[v] & dmask).bit_count() > j:
                    ok = False
                    break
                rem ^= low
            if ok:
                return k, frozenset(combo)
    return None


def _bnb_min_1j(g: Graph, j: int, budget: int | None) -> tuple[int, frozenset[int]] | None:
    n = g.n
    if n == 0:
        return 0, frozenset()
    adj = [g.neighbors(v) for v in range(n)]
    denom = g.max_degree() + 1
    UNDECIDED, IN, OUT = 0, 1, 2
    state = [UNDECIDED] * n
    cnt = [0] * n  # selected neighbors of each vertex

    best_val = n
    best_set: tuple[int, ...] | None = tuple(range(n))  # D = V always qualifies
    if budget is not None and budget < n:
        best_val = budget + 1
        best_set = None

    def assign_in(v: int, trail: list[tuple[str, int]]) -> None:
        state[v] = IN
        trail.append(("in", v))
        for u in adj[v]:
            cnt[u] += 1

    def assign_out(v: int, trail: list[tuple[str, int]]) -> None:
        state[v] = OUT
        trail.append(("out", v))

    def undo(trail: list[tuple[str, int]]) -> None:
        while trail:
            kind, v = trail.pop()
            state[v] = UNDECIDED
            if kind == "in":
                for u in adj[v]:
                    cnt[u] -= 1

    def propagate(trail: list[tuple[str, int]]) -> bool:
        """Forced moves to fixpoint; False signals a dead branch."""
        changed = True
        while changed:
            changed = False
            for v in range(n):
                st = state[v]
                if st == IN:
                    continue
                c = cnt[v]
                if st == OUT:
                    if c > j:
                        return False
                    if c == 0:
                        undecided = [u for u in adj[v] if state[u] == UNDECIDED]
                        if not undecided:
                            return False
                        if len(undecided) == 1:
                            assign_in(undecided[0], trail)
                            changed = True
                    elif c == j:
                        # selecting any further neighbor would overdominate v
                        for u in adj[v]:
                            if state[u] == UNDECIDED:
                                assign_out(u, trail)
                                changed = True
                else:  # UNDECIDED
                    if c > j:
                        assign_in(v, trail)
                        changed = True
        return True

    def search() -> None:
        nonlocal best_val, best_set
        trail: list[tuple[str, int]] = []
        if not propagate(trail):
            undo(trail)
            return
        selected = sum(1 for s in state if s == IN)
        undominated = [v for v in range(n) if state[v] != IN and cnt[v] == 0]
        lb = selected + ceil(len(undominated) / denom)
        if lb >= best_val:
            undo(trail)
            return
        if not undominated:
            # excluding every remaining undecided vertex is feasible and
            # minimal within this subtree
            best_val = selected
            best_set = tuple(v for v in range(n) if state[v] == IN)
            undo(trail)
            return
        branch = None
        for v in undominated:
            if state[v] == UNDECIDED:
                branch = v
                break
        if branch is None:
            # undominated vertices are all excluded: pick their lowest
            # undecided neighbor (one exists, else propagate had failed)
            cands = [u for v in undominated for u in adj[v] if state[u] == UNDECIDED]
            branch = min(cands)
        sub: list[tuple[str, int]] = []
        assign_in(branch, sub)
        search()
        undo(sub)
        assign_out(branch, sub)
        search()
        undo(sub)
        undo(trail)

    search()
    if best_set is None:
        return None
    return best_val, frozenset(best_set)


def exact_gamma_1j(
    g: Graph,
    j: int,
    engine: str = "enumeration",
    budget: int | None = None,
    force: bool = False,
) -> tuple[int, Witness] | None:
    """Minimum (1,j)-set by exhaustive search.

    Returns (value, witness), or None when a budget is given and no
    (1,j)-set of size <= budget exists.  Without a budget an answer always
    exists because the whole vertex set vacuously qualifies.
    """
    if j < 1:
        raise PreconditionError("j must be a positive integer")
    if budget is not None and budget < 0:
        raise PreconditionError("budget must be nonnegative")
    try:
        engine = _ENGINE_ALIASES[engine]
    except KeyError:
        raise PreconditionError(f"unknown engine {engine!r}") from None
    if engine == "enumeration":
        _check_guard(g.n, ENUM_GUARD, force, "enumeration")
        hit = _enum_min_1j(g, j, budget)
    else:
        _check_guard(g.n, BNB_GUARD, force, "branch_and_bound")
        hit = _bnb_min_1j(g, j, budget)
    if hit is None:
        return None
    value, vertices = hit
    return value, Witness(frozenset(vertices))


def exact_gamma(g: Graph, force: bool = False) -> int:
    """Plain domination number by enumeration in increasing cardinality."""
    _check_guard(g.n, ENUM_GUARD, force, "enumeration")
    n = g.n
    if n == 0:
        return 0
    masks = g.neighbor_masks()
    full = (1 << n) - 1
    bits = [1 << v for v in range(n)]
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            cover = 0
            for v in combo:
                cover |= bits[v] | masks[v]
            if cover == full:
                return k
    raise AssertionError("unreachable: V dominates itself")


def exact_gamma_M(t, force: bool = False) -> tuple[int, Witness]:
    """Minimum band-feasible set of a labeled tree by enumeration.

    For every vertex v outside the set, the count of selected neighbors
    must lie in [lower[v], upper[v]].  The whole vertex set is always
    feasible, so a minimum exists.
    """
    g: Graph = t.tree
    lower, upper = t.lower, t.upper
    _check_guard(g.n, ENUM_GUARD, force, "enumeration")
    n = g.n
    masks = g.neighbor_masks()
    bits = [1 << v for v in range(n)]
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            smask = 0
            for v in combo:
                smask |= bits[v]
            ok = True
            for v in range(n):
                if smask & bits[v]:
                    continue
                c = (masks[v] & smask).bit_count()
                if not lower[v] <= c <= upper[v]:
                    ok = False
                    break
            if ok:
                return k, Witness(frozenset(combo))
    raise AssertionError("unreachable: V is always an M-set")
