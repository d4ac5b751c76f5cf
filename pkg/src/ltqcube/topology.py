"""Locally twisted cube topology: bit-string labels, adjacency, and edges.

An n-dimensional locally twisted cube has 2**n nodes, each labeled by an
n-bit string b_{n-1} .. b_1 b_0 written most significant bit first. The
graph is defined recursively: the 2-dimensional cube is the four-cycle on
00, 01, 11, 10, and for n >= 3 the graph consists of two (n-1)-dimensional
copies, one holding the labels with leading bit 0 and one with leading
bit 1, joined by a twist edge from each node 0 b_{n-2} .. b_0 to
1 (b_{n-2} xor b_0) b_{n-3} .. b_0.

Two neighbor routines are provided. `neighbors` applies the closed-form
rule the recursion unfolds to: flip bit 0, flip bit 1, or, for any
k >= 2, flip bit k and replace bit k-1 with b_{k-1} xor b_0. It answers
queries in O(n). `neighbors_recursive` instead expands the recursive
definition literally on bit strings, taking no shortcuts; it exists as the
oracle the closed form is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import AdjacencyError, DimensionError, LabelFormatError

#: Largest supported dimension. Keeps exhaustive edge sets addressable.
MAX_DIM = 30


@dataclass(frozen=True, order=True)
class NodeLabel:
    """One node of a locally twisted cube: an unsigned value plus its bit width."""

    dim: int
    value: int

    def __post_init__(self) -> None:
        if not 2 <= self.dim <= MAX_DIM:
            raise DimensionError(f"dim must be in [2, {MAX_DIM}], got {self.dim}")
        if not 0 <= self.value < 1 << self.dim:
            raise LabelFormatError(f"value {self.value} out of range for dim {self.dim}")

    @property
    def bits(self) -> str:
        """Binary rendering, exactly `dim` characters, most significant bit first."""
        return format(self.value, f"0{self.dim}b")

    def __str__(self) -> str:
        return self.bits


@dataclass(frozen=True, order=True)
class Edge:
    """An unordered pair of adjacent nodes, stored smaller value first."""

    a: NodeLabel
    b: NodeLabel

    def __post_init__(self) -> None:
        if self.a.dim != self.b.dim:
            raise DimensionError(f"edge endpoints differ in dim: {self.a.dim} vs {self.b.dim}")
        if self.a.value > self.b.value:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)
        if not _adjacent_values(self.a.dim, self.a.value, self.b.value):
            raise AdjacencyError(f"{self.a.bits} and {self.b.bits} are not adjacent")

    @property
    def dim(self) -> int:
        return self.a.dim

    def __str__(self) -> str:
        return f"{self.a.bits} {self.b.bits}"


def make_label(dim: int, bits: str) -> NodeLabel:
    """Parse a binary string of exactly `dim` characters into a NodeLabel."""
    if not 2 <= dim <= MAX_DIM:
        raise DimensionError(f"dim must be in [2, {MAX_DIM}], got {dim}")
    if len(bits) != dim:
        raise LabelFormatError(f"expected {dim} characters, got {len(bits)}: {bits!r}")
    if not set(bits) <= {"0", "1"}:
        raise LabelFormatError(f"label must contain only 0 and 1: {bits!r}")
    return NodeLabel(dim, int(bits, 2))


def repeat_bits(pattern: str, times: int) -> str:
    """Concatenate `times` copies of a binary string (zero copies give '')."""
    if not set(pattern) <= {"0", "1"}:
        raise LabelFormatError(f"pattern must contain only 0 and 1: {pattern!r}")
    if times < 0:
        raise LabelFormatError(f"times must be >= 0, got {times}")
    return pattern * times


def _cross_value(dim: int, value: int) -> int:
    # Flip the leading bit; bit n-2 becomes b_{n-2} xor b_0.
    return value ^ (1 << (dim - 1)) ^ ((value & 1) << (dim - 2))


def cross_neighbor(x: NodeLabel) -> NodeLabel:
    """The twist-edge partner of `x` in the opposite half of the cube.

    Sends 0 b_{n-2} .. b_0 to 1 (b_{n-2} xor b_0) b_{n-3} .. b_0 and back;
    the map is an involution. Defined for dim >= 3, where the recursive
    split into halves exists.
    """
    if x.dim < 3:
        raise DimensionError("the twist rule needs dim >= 3; LTQ_2 edges are fixed")
    return NodeLabel(x.dim, _cross_value(x.dim, x.value))


def _neighbor_values(dim: int, value: int) -> list[int]:
    lsb = value & 1
    out = [value ^ 1, value ^ 2]
    out.extend(value ^ (1 << k) ^ (lsb << (k - 1)) for k in range(2, dim))
    return out


def _adjacent_values(dim: int, u: int, v: int) -> bool:
    d = u ^ v
    if d == 1 or d == 2:
        return True
    if d == 0:
        return False
    k = d.bit_length() - 1
    if k < 2:
        return False
    if u & 1:
        return d == 3 << (k - 1)
    return d == 1 << k


def neighbors(x: NodeLabel) -> set[NodeLabel]:
    """All `dim` neighbors of `x`, by the closed-form rule.

    For dim 2 the rule degenerates to flipping either bit, which is exactly
    the four-cycle adjacency of LTQ_2.
    """
    return {NodeLabel(x.dim, v) for v in _neighbor_values(x.dim, x.value)}


#: The four defining edges of LTQ_2.
_LTQ2_EDGES = (("00", "01"), ("00", "10"), ("01", "11"), ("10", "11"))


def _twist_string(bits: str) -> str:
    lead = "1" if bits[0] == "0" else "0"
    second = "1" if bits[1] != bits[-1] else "0"
    return lead + second + bits[2:]


def _recursive_neighbor_strings(bits: str) -> set[str]:
    if len(bits) == 2:
        return {b for a, b in _LTQ2_EDGES if a == bits} | {a for a, b in _LTQ2_EDGES if b == bits}
    within = {bits[0] + rest for rest in _recursive_neighbor_strings(bits[1:])}
    within.add(_twist_string(bits))
    return within


def neighbors_recursive(x: NodeLabel) -> set[NodeLabel]:
    """All neighbors of `x`, computed by literal recursion on bit strings.

    Base case: the explicit LTQ_2 edge list. Level n: neighbors within the
    same half are the neighbors of the (n-1)-bit suffix, re-prefixed, plus
    the one twist-edge partner. Agrees with `neighbors` everywhere; kept
    deliberately independent of the bitwise closed form.
    """
    return {make_label(x.dim, s) for s in _recursive_neighbor_strings(x.bits)}


def is_adjacent(x: NodeLabel, y: NodeLabel) -> bool:
    """True iff `x` and `y` are joined by an edge."""
    if x.dim != y.dim:
        raise DimensionError(f"cannot compare labels of dim {x.dim} and {y.dim}")
    return _adjacent_values(x.dim, x.value, y.value)


def edges(dim: int) -> set[Edge]:
    """Every edge of the dim-dimensional cube, canonically ordered.

    The result has exactly dim * 2**(dim-1) members.
    """
    if not 2 <= dim <= MAX_DIM:
        raise DimensionError(f"dim must be in [2, {MAX_DIM}], got {dim}")
    out: set[Edge] = set()
    for v in range(1 << dim):
        for u in _neighbor_values(dim, v):
            if u > v:
                out.add(Edge(NodeLabel(dim, v), NodeLabel(dim, u)))
    return out


def subcube_of(x: NodeLabel) -> int:
    """Which (dim-1)-dimensional half holds `x`: its most significant bit."""
    if x.dim < 3:
        raise DimensionError("LTQ_2 does not decompose into halves")
    return x.value >> (x.dim - 1)


def successive_bits_property(x: NodeLabel, y: NodeLabel) -> bool:
    """True iff the labels differ in no bits, one bit, or two successive bits.

    Every edge of the cube satisfies this; it is the defining "locally
    twisted" trait.
    """
    if x.dim != y.dim:
        raise DimensionError(f"cannot compare labels of dim {x.dim} and {y.dim}")
    d = x.value ^ y.value
    if d == 0 or d & (d - 1) == 0:
        return True
    low = (d & -d).bit_length() - 1
    return d >> low == 3


@dataclass(frozen=True)
class LtqGraph:
    """A locally twisted cube of a fixed dimension.

    The vertex set {0, .., 2**dim - 1} is implicit and adjacency is
    answered by the neighbor rule; nothing is stored densely.
    """

    dim: int

    def __post_init__(self) -> None:
        if not 2 <= self.dim <= MAX_DIM:
            raise DimensionError(f"dim must be in [2, {MAX_DIM}], got {self.dim}")

    @property
    def vertex_count(self) -> int:
        return 1 << self.dim

    @property
    def edge_count(self) -> int:
        return self.dim << (self.dim - 1)

    def vertices(self) -> Iterator[NodeLabel]:
        for v in range(1 << self.dim):
            yield NodeLabel(self.dim, v)

    def neighbors(self, x: NodeLabel) -> set[NodeLabel]:
        if x.dim != self.dim:
            raise DimensionError(f"label dim {x.dim} does not match graph dim {self.dim}")
        return neighbors(x)

    def is_adjacent(self, x: NodeLabel, y: NodeLabel) -> bool:
        if x.dim != self.dim:
            raise DimensionError(f"label dim {x.dim} does not match graph dim {self.dim}")
        return is_adjacent(x, y)

    def edges(self) -> set[Edge]:
        return edges(self.dim)
