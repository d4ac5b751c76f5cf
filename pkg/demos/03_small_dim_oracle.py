#!/usr/bin/env python3
"""Exhaustive ground truth at desk scale: enumerate cycles, settle dim 3."""

from itertools import combinations

from ltqcube import (
    are_edge_disjoint,
    edh_cycles,
    enumerate_hamiltonian_cycles,
    exists_two_edge_disjoint_hc,
)

print("Every Hamiltonian cycle, exhaustively, at dimensions 2 and 3:")
for dim in (2, 3):
    cycles = enumerate_hamiltonian_cycles(dim)
    print(f"  dim {dim}: {len(cycles)} cycle(s)")
    for c in cycles:
        print("    " + " -> ".join(str(n) for n in c.nodes))

print("\nDimension 3 cannot host two edge-disjoint Hamiltonian cycles:")
result = exists_two_edge_disjoint_hc(3)
print(f"  exists: {result.exists}")
for certificate in result.certificates:
    print(f"  - {certificate}")

cycles3 = enumerate_hamiltonian_cycles(3)
pairs = list(combinations(cycles3, 2))
disjoint = [p for p in pairs if are_edge_disjoint(*p)]
print(f"  re-checked by hand: {len(disjoint)} disjoint pairs among {len(pairs)}")

print("\nDimension 4 has 780 Hamiltonian cycles; the constructed pair is among them:")
cycles4 = enumerate_hamiltonian_cycles(4)
listed = {c.nodes for c in cycles4}
pair = edh_cycles(4)
print(f"  enumerated: {len(cycles4)}")
print(f"  first constructed cycle listed:  {pair.first.nodes in listed}")
print(f"  second constructed cycle listed: {pair.second.nodes in listed}")

witness = exists_two_edge_disjoint_hc(4)
print(f"  pair existence at dim 4: {witness.exists}")
