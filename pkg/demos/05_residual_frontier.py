#!/usr/bin/env python3
"""What the two cycles leave behind, and the hunt for a third disjoint one.

Whether more than two edge-disjoint Hamiltonian cycles exist (for dim >= 6)
is open; this script only records what a bounded search finds for THIS
pair's residual. Finding nothing proves nothing.
"""

import time

from ltqcube import edh_cycles, residual_analysis

print("Removing both cycles leaves a (dim-4)-regular residual graph:")
for dim in range(4, 9):
    analysis = residual_analysis(dim, edh_cycles(dim))
    total = dim * 2 ** (dim - 1)
    print(f"  dim {dim}: {len(analysis.unused_edges):4d} of {total:5d} edges unused, "
          f"degree histogram {analysis.degree_histogram}")

print("\ndim 4 uses every edge and dim 5 leaves a perfect matching,")
print("so neither can hide a third cycle. dim 6 leaves a 2-regular graph:")
print("a third Hamiltonian cycle exists there iff the residual is one 64-cycle.")

for dim, budget in ((5, 10_000), (6, 1_000_000), (7, 2_000_000)):
    start = time.perf_counter()
    analysis = residual_analysis(dim, edh_cycles(dim), search_budget=budget)
    elapsed = time.perf_counter() - start
    if analysis.third_cycle_found is None:
        print(f"  dim {dim}: no third cycle within budget {budget:,} ({elapsed:.2f}s)")
    else:
        print(f"  dim {dim}: FOUND a third edge-disjoint Hamiltonian cycle ({elapsed:.2f}s):")
        print("    " + " -> ".join(str(n) for n in analysis.third_cycle_found.nodes))

print("\nLarger dimensions leave more room (degree dim-4 keeps growing);")
print("raise the budget and dimension to explore further, e.g.:")
print("  residual_analysis(8, edh_cycles(8), search_budget=10_000_000)")
