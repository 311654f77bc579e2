#!/usr/bin/env python3
"""Exact oracles: verification, enumeration, branch and bound.

A (1,j)-set must give every outside vertex between 1 and j selected
neighbors.  Shrinking j squeezes the admissible sets from above, so the
minimum sizes nest between the plain domination number and n.
"""

from onejdom import (complete_graph, cycle_graph, exact_gamma, exact_gamma_1j,
                     gnp, path_graph, star_graph, verify_1j_set)

print("=" * 72)
print("VERIFICATION")
print("=" * 72)

star = star_graph(3)
report = verify_1j_set(star, {1, 2, 3}, 2)
print("star K_{1,3}, D = leaves, j = 2 ->", report)
print("  the center collects one neighbor per leaf: 3 > j, so D is invalid")

report = verify_1j_set(star, {0}, 2)
print("star K_{1,3}, D = {center}, j = 2 ->", report.valid)

print()
print("=" * 72)
print("MINIMA ON SMALL FAMILIES")
print("=" * 72)

for name, g in [("path P6", path_graph(6)),
                ("cycle C6", cycle_graph(6)),
                ("clique K6", complete_graph(6)),
                ("star K_{1,5}", star_graph(5))]:
    row = [exact_gamma_1j(g, j)[0] for j in (1, 2, 3)]
    print(f"{name:14s} gamma = {exact_gamma(g)}   gamma_(1,j) for j=1,2,3: {row}")

print()
print("=" * 72)
print("SANDWICH ON RANDOM GRAPHS")
print("=" * 72)
print("gamma <= gamma_(1,3) <= gamma_(1,2) <= gamma_(1,1) <= n, and j = max")
print("degree makes the upper constraint vacuous:")
print()

for seed in range(5):
    g = gnp(12, 0.3, seed)
    if g.max_degree() == 0:
        continue
    gam = exact_gamma(g)
    vals = [exact_gamma_1j(g, j, engine="bnb")[0] for j in (1, 2, 3)]
    vac = exact_gamma_1j(g, g.max_degree(), engine="bnb")[0]
    print(f"seed {seed}: n=12 m={g.m:2d}  gamma={gam}  "
          f"(1,3)={vals[2]} (1,2)={vals[1]} (1,1)={vals[0]}  "
          f"(1,maxdeg)={vac}")

print()
print("Budgeted search answers the decision problem directly:")
g = path_graph(4)
print("  P4, j=2, budget 1 ->", exact_gamma_1j(g, 2, budget=1))
print("  P4, j=2, budget 2 ->", exact_gamma_1j(g, 2, budget=2))
