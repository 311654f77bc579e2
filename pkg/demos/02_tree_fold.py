#!/usr/bin/env python3
"""The tree dynamic program, from uniform bands to arbitrary ones.

Each vertex of a labeled tree carries a band [lower, upper]; unselected
vertices must see a number of selected neighbors inside their band.  One
post-order fold computes the minimum, and uniform bands (1, j) recover the
minimum (1,j)-set of the tree in linear time.
"""

import random
import time

from onejdom import (MLabeledTree, exact_gamma_1j, exact_gamma_M, gamma_1j_tree,
                     gamma_M, m_band_violations, path_graph, random_tree,
                     star_graph)

print("=" * 72)
print("UNIFORM BANDS = (1,j)-DOMINATION")
print("=" * 72)

for n in (4, 7, 10):
    g = path_graph(n)
    row = [gamma_1j_tree(g, j)[0] for j in (1, 2, 3)]
    print(f"path P{n}: gamma_(1,j) for j=1,2,3 -> {row}")
print("star K_{1,6}: ", gamma_1j_tree(star_graph(6), 2))

print()
print("=" * 72)
print("ARBITRARY BANDS")
print("=" * 72)

g = star_graph(4)
t = MLabeledTree(g, lower=(0, 1, 1, 1, 1), upper=(0, 1, 1, 1, 1))
value, witness = gamma_M(t)
print("star K_{1,4}, center banded (0,0), leaves (1,1):")
print(f"  minimum = {value}, witness = {sorted(witness.vertices)}")
print("  each leaf must be seen exactly once, the center not at all unless")
print("  selected; selecting the center alone settles everything")

print()
print("=" * 72)
print("AGREEMENT WITH THE ENUMERATION ORACLE")
print("=" * 72)

rnd = random.Random(0)
t0 = time.time()
for trial in range(60):
    n = rnd.randint(1, 12)
    g = random_tree(n, trial)
    lower, upper = [], []
    for _ in range(n):
        a = rnd.randint(0, 3)
        lower.append(a)
        upper.append(rnd.randint(a, 3))
    lt = MLabeledTree(g, tuple(lower), tuple(upper))
    fold_value, fold_witness = gamma_M(lt)
    brute_value, _ = exact_gamma_M(lt)
    assert fold_value == brute_value
    assert not m_band_violations(lt, fold_witness.vertices)
print(f"60 random labeled trees: fold == oracle, witnesses in-band "
      f"({time.time() - t0:.2f}s)")

print()
print("The value is root-invariant; witnesses may differ but stay optimal:")
g = random_tree(9, 5)
for root in (0, 4, 8):
    value, witness = gamma_1j_tree(g, 2, root=root)
    print(f"  root {root}: value {value}, witness {sorted(witness.vertices)}")

big = random_tree(2000, 1)
t0 = time.time()
value, _ = gamma_1j_tree(big, 2)
print(f"\n2000-vertex tree solved in {time.time() - t0:.3f}s (value {value});")
print(f"the oracle would enumerate 2^2000 subsets "
      f"(oracle check: {exact_gamma_1j(random_tree(16, 1), 2)[0]} == "
      f"{gamma_1j_tree(random_tree(16, 1), 2)[0]} at n = 16)")
