#!/usr/bin/env python3
"""A tour of the locally twisted cube: labels, the twist rule, and counts."""

from ltqcube import (
    LtqGraph,
    cross_neighbor,
    make_label,
    neighbors,
    neighbors_recursive,
    subcube_of,
    successive_bits_property,
)

print("The 2-dimensional cube is a plain four-cycle:")
for bits in ("00", "01", "10", "11"):
    x = make_label(2, bits)
    print(f"  {x} ~ {sorted(str(n) for n in neighbors(x))}")

print("\nFrom dimension 3 on, the two halves are joined by a twist edge.")
print("Flipping the leading bit also re-derives bit n-2 from bit 0:")
for bits in ("0011", "0000", "0110", "1001"):
    x = make_label(4, bits)
    print(f"  {x} twists to {cross_neighbor(x)}   (half {subcube_of(x)} -> {subcube_of(cross_neighbor(x))})")

print("\nClosed-form neighbors versus the literal recursive definition:")
x = make_label(4, "0011")
print(f"  closed form of {x}: {sorted(str(n) for n in neighbors(x))}")
print(f"  recursion    of {x}: {sorted(str(n) for n in neighbors_recursive(x))}")

mismatches = 0
for dim in range(2, 11):
    for v in range(1 << dim):
        lab = make_label(dim, format(v, f"0{dim}b"))
        if neighbors(lab) != neighbors_recursive(lab):
            mismatches += 1
print(f"  disagreements across all nodes of dims 2..10: {mismatches}")

print("\nAdjacent labels always differ in at most two successive bits:")
x = make_label(4, "0011")
for y in sorted(neighbors(x)):
    print(f"  {x} vs {y}: xor {x.value ^ y.value:04b}, "
          f"successive: {successive_bits_property(x, y)}")

print("\nSize bookkeeping (2^n nodes, n * 2^(n-1) edges, n-regular):")
for dim in range(2, 9):
    g = LtqGraph(dim)
    degrees = {len(g.neighbors(v)) for v in g.vertices()}
    print(f"  dim {dim}: {g.vertex_count:4d} nodes, {g.edge_count:5d} edges, degrees {degrees}")
