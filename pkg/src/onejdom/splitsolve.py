"""Polynomial minimum (1,j)-set for connected split graphs.

Any (1,j)-set of a split graph with clique K (|K| = n1 > j) intersects K
in exactly i vertices for some i in {0, 1, ..., j, n1}: a trace strictly
between j and n1 would leave some clique vertex outside the set with more
than j selected neighbors.  The solver therefore scans one candidate per
trace class and keeps the smallest:

  i = 0        D = S, admissible iff every clique degree is in
               [n1, n1+j-1];
  0 < i < j    for each i-subset K_i, the independents S_i not seen by K_i
               are forced in, and K_i u S_i works iff every remaining
               clique vertex has at most j-i neighbors inside S_i;
  i = j        any j-subset whose neighborhood covers S is itself a
               (1,j)-set;
  i = n1       K plus the independents of degree >= j+1 (which can never
               sit outside the set once K is inside).

When n1 <= j the trace restriction is vacuous, and all 2^n1 clique subsets
are enumerated with their forced independent side instead.  Every candidate
is re-verified before it may win; a candidate that fails verification
aborts the run, because it would mean the case analysis was misapplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InternalContradictionError, PreconditionError
from .graph import Graph, SplitPartition, is_connected, validate_split_partition
from .oracle import Witness, verify_1j_set


@dataclass(frozen=True)
class SplitCaseResult:
    """One trace-class candidate: case_index j+1 encodes the K-inside case."""

    case_index: int
    candidate: Witness | None


@dataclass(frozen=True)
class GammaNReport:
    """Outcome of the four-condition whole-vertex-set characterization."""

    holds: bool
    failed: tuple[str, ...]


def _checked(g: Graph, j: int, case_index: int, vertices: set[int], detail: str) -> frozenset[int]:
    report = verify_1j_set(g, vertices, j)
    if not report.valid:
        raise InternalContradictionError(
            f"case {case_index} produced an invalid candidate ({detail}): "
            f"undominated={list(report.undominated)} "
            f"overdominated={list(report.overdominated)}")
    return frozenset(vertices)


def _small_clique_scan(g: Graph, K: list[int], S: list[int], j: int) -> tuple[int, frozenset[int]]:
    """All clique subsets, each with its forced independent side (n1 <= j)."""
    best: tuple[int, frozenset[int]] | None = None
    for r in range(len(K) + 1):
        if best is not None and best[0] <= r:
            break
        for ksub in combinations(K, r):
            dk = set(ksub)
            forced = [u for u in S if not 1 <= len(dk & g.neighbor_set(u)) <= j]
            cand = dk | set(forced)
            if not verify_1j_set(g, cand, j).valid:
                continue
            if best is None or len(cand) < best[0]:
                best = (len(cand), frozenset(cand))
    assert best is not None  # K union forced-S with D_K = K is always valid
    return best


def split_case_candidates(g: Graph, part: SplitPartition, j: int) -> list[SplitCaseResult]:
    """Candidates for each trace class i in {0, ..., j, n1}; requires n1 > j."""
    K = sorted(part.clique)
    S = sorted(part.independent)
    n1 = len(K)
    results: list[SplitCaseResult] = []

    # i = 0: only D = S can have an empty clique trace
    if all(n1 <= g.degree(v) <= n1 + j - 1 for v in K):
        vertices = _checked(g, j, 0, set(S), "D = S")
        results.append(SplitCaseResult(0, Witness(vertices)))
    else:
        results.append(SplitCaseResult(0, None))

    # 0 < i < j
    for i in range(1, j):
        best: frozenset[int] | None = None
        for ksub in combinations(K, i):
            seen: set[int] = set()
            for v in ksub:
                seen |= g.neighbor_set(v)
            s_i = [u for u in S if u not in seen]
            s_iset = frozenset(s_i)
            if any(len(g.neighbor_set(v) & s_iset) > j - i for v in K if v not in ksub):
                continue
            cand = _checked(g, j, i, set(ksub) | set(s_i), f"K_i={ksub}")
            if best is None or len(cand) < len(best):
                best = cand
        results.append(SplitCaseResult(i, Witness(best) if best is not None else None))

    # i = j: a j-subset of K whose neighborhood covers S
    best_j: frozenset[int] | None = None
    sset = set(S)
    for ksub in combinations(K, j):
        seen = set()
        for v in ksub:
            seen |= g.neighbor_set(v)
        if sset <= seen:
            best_j = _checked(g, j, j, set(ksub), f"K_j={ksub}")
            break  # all case-j candidates have size j; first in lex order wins
    results.append(SplitCaseResult(j, Witness(best_j) if best_j is not None else None))

    # i = n1: K inside forces the high-degree independents inside too
    s2 = [u for u in S if g.degree(u) >= j + 1]
    vertices = _checked(g, j, j + 1, set(K) | set(s2), "K union S2")
    results.append(SplitCaseResult(j + 1, Witness(vertices)))
    return results


def gamma_1j_split(g: Graph, part: SplitPartition, j: int) -> tuple[int, Witness]:
    """Minimum (1,j)-set of a connected split graph with its partition."""
    if j < 1:
        raise PreconditionError("j must be a positive integer")
    validate_split_partition(g, part)
    if not is_connected(g):
        raise PreconditionError("split solver requires a connected graph")
    K = sorted(part.clique)
    S = sorted(part.independent)
    if len(K) <= j:
        value, vertices = _small_clique_scan(g, K, S, j)
        return value, Witness(vertices)
    best: Witness | None = None
    for case in split_case_candidates(g, part, j):
        cand = case.candidate
        if cand is not None and (best is None or cand.cardinality < best.cardinality):
            best = cand
    assert best is not None  # the K-inside case always emits
    return best.cardinality, best


def is_gamma_n_split(g: Graph, part: SplitPartition, j: int) -> GammaNReport:
    """Evaluate the four conditions equivalent to "no proper (1,j)-set".

    (i)   some clique vertex has degree outside [n1, n1+j-1] - either
          at least j independent neighbors (it would be over-dominated by
          S) or none at all (it would be undominated by S); either way the
          all-independents candidate dies.  Testing only the high side
          breaks the equivalence: a clique vertex with no independent
          neighbors kills that candidate just as surely;
    (ii)  for every i in [j-1] and every i-subset K_i, some remaining
          clique vertex keeps more than j-i neighbors among the
          independents not seen by K_i;
    (iii) no j-subset of K dominates all of S;
    (iv)  every independent vertex has degree >= j + 1.

    Holds iff the minimum (1,j)-set is the whole vertex set, for connected
    split graphs with at least two vertices (the single-vertex graph is a
    degenerate exception: its minimum is trivially n but the case analysis
    behind the conditions does not apply).
    """
    if j < 1:
        raise PreconditionError("j must be a positive integer")
    validate_split_partition(g, part)
    if not is_connected(g):
        raise PreconditionError("characterization requires a connected graph")
    K = sorted(part.clique)
    S = sorted(part.independent)
    n1 = len(K)
    failed: list[str] = []

    if not any(g.degree(v) >= n1 + j or g.degree(v) < n1 for v in K):
        failed.append("i")

    cond2 = True
    for i in range(1, j):
        for ksub in combinations(K, i):
            seen: set[int] = set()
            for v in ksub:
                seen |= g.neighbor_set(v)
            s_i = frozenset(u for u in S if u not in seen)
            if not any(len(g.neighbor_set(v) & s_i) >= j - i + 1
                       for v in K if v not in ksub):
                cond2 = False
                break
        if not cond2:
            break
    if not cond2:
        failed.append("ii")

    cond3 = True
    sset = set(S)
    for ksub in combinations(K, j):
        seen = set()
        for v in ksub:
            seen |= g.neighbor_set(v)
        if sset <= seen:
            cond3 = False
            break
    if not cond3:
        failed.append("iii")

    if not all(g.degree(u) >= j + 1 for u in S):
        failed.append("iv")

    return GammaNReport(not failed, tuple(failed))
