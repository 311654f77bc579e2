#!/usr/bin/env python3
"""Split graphs: recognition, the trace-class algorithm, and graphs whose
minimum (1,j)-set is everything.

A split graph partitions into a clique K and an independent set S.  Any
(1,j)-set meets K in 0, 1, ..., j, or |K| vertices (anything in between
over-dominates a leftover clique vertex), so scanning one candidate per
trace class is exact and polynomial for fixed j.
"""

import itertools

from onejdom import (Graph, SplitPartition, composite_gamma_n, exact_gamma_1j,
                     gamma_1j_split, is_gamma_n_split, random_split,
                     split_recognition)
from onejdom.splitsolve import split_case_candidates

print("=" * 72)
print("RECOGNITION AND THE CASE SCAN")
print("=" * 72)

g, part = random_split(5, 6, 0.45, 12)
recognized = split_recognition(g)
print(f"random split graph: n={g.n} m={g.m}")
print(f"  recognized clique {sorted(recognized.clique)}, "
      f"independents {sorted(recognized.independent)}")

for j in (1, 2):
    cases = split_case_candidates(g, part, j)
    print(f"  j={j} trace-class candidates:")
    for case in cases:
        label = f"|K intersect D| = {case.case_index}" if case.case_index <= j \
            else "K inside D"
        if case.candidate is None:
            print(f"    {label:22s} -> no admissible candidate")
        else:
            print(f"    {label:22s} -> size {case.candidate.cardinality}")
    value, witness = gamma_1j_split(g, part, j)
    brute = exact_gamma_1j(g, j)[0]
    print(f"  minimum = {value} (oracle {brute}), witness {sorted(witness.vertices)}")

print()
print("=" * 72)
print("WHEN NOTHING SHORT OF EVERYTHING WORKS")
print("=" * 72)
print("""
Four conditions pin down the split graphs whose minimum (1,j)-set is the
whole vertex set.  The smallest example for j = 2 has 12 vertices: clique
{0..5}, and six independents, each adjacent to the clique minus a 3-block,
the blocks chosen so every clique pair is jointly missed.""")

blocks = [(0, 1, 2), (0, 3, 4), (0, 4, 5), (1, 3, 5), (2, 3, 5), (1, 2, 4)]
K = list(range(6))
edges = list(itertools.combinations(K, 2))
for si, block in enumerate(blocks):
    for v in K:
        if v not in block:
            edges.append((v, 6 + si))
g12 = Graph(12, edges)
part12 = SplitPartition(frozenset(K), frozenset(range(6, 12)))

report = is_gamma_n_split(g12, part12, 2)
value, _ = gamma_1j_split(g12, part12, 2)
print(f"conditions hold: {report.holds}; solver value {value} == n = {g12.n}; "
      f"oracle {exact_gamma_1j(g12, 2)[0]}")

print()
print("Joining the cliques of two such graphs by arbitrary edges preserves")
print("the property (the independents never gain neighbors):")
comp = composite_gamma_n([(g12, part12), (g12, part12)], 2,
                         cross_edges=[((0, 0), (1, 0)), ((0, 3), (1, 5))])
value, _ = exact_gamma_1j(comp, 2, engine="bnb")
print(f"  composite on {comp.n} vertices: minimum (1,2)-set has size {value}")
