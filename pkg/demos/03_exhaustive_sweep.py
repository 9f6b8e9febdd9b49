"""
Exhaustive sweeps over small models
===================================

Enumerate posets up to isomorphism, pair the bounded ones with every unary
map that swaps 0 and 1, and check adjointness and the identity suite on each
model that satisfies a premise bundle.
"""

import sys

from posetres import Premise, check_corollary, enumerate_posets, sweep

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 5

# 1, 2, 5, 16, 63, 318 posets on 1..6 points
for n in range(1, n_max + 1):
    print(f"n={n}: {sum(1 for _ in enumerate_posets(n))} posets up to isomorphism")

for premise in Premise:
    report = sweep(premise, n_max)
    print(report.summary())
    for failure in report.adjointness_failures[:3]:
        print("  ", failure)

# Bounded, complemented and strongly modular models satisfy the general premises
cor = check_corollary(n_max)
print(f"corollary: {cor.qualifying_models} qualifying models, {len(cor.failures)} failures")
