"""Two edge-disjoint Hamiltonian paths and cycles, built inductively.

Dimension 4 is the seed: two explicit edge-disjoint Hamiltonian paths
(constants below) running 0010 -> 0000 and 0110 -> 0100. Dimension n >= 5
doubles dimension n-1: lay the old path down in the 0-half, append the
reversed copy from the 1-half, and join the two through the twist edge
between their old end nodes. The resulting end nodes are

    first:   00 0^(n-5) 010  ->  10 0^(n-5) 010
    second:  00 0^(n-5) 110  ->  10 0^(n-5) 110

and each start/end pair is itself a twist edge, so closing both paths
yields two edge-disjoint Hamiltonian cycles for every n >= 4. Dimension 3
admits no such pair: each node has only three incident edges and two
edge-disjoint cycles would need four.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AdjacencyError,
    DimensionError,
    InvalidPairError,
    JunctionError,
    LtqError,
    OverlapError,
)
from .topology import Edge, NodeLabel, _adjacent_values, make_label, repeat_bits

_BASE_FIRST = (
    "0010", "0110", "0111", "0101", "0100", "1100", "1110", "1010",
    "1000", "1001", "1011", "1101", "1111", "0011", "0001", "0000",
)
_BASE_SECOND = (
    "0110", "1110", "1111", "1001", "0101", "0011", "0010", "1010",
    "1011", "0111", "0001", "1101", "1100", "1000", "0000", "0100",
)


def _check_nodes(nodes: tuple[NodeLabel, ...], *, closed: bool) -> None:
    dim = nodes[0].dim
    for node in nodes:
        if node.dim != dim:
            raise DimensionError(f"mixed dimensions in sequence: {dim} and {node.dim}")
    if len({node.value for node in nodes}) != len(nodes):
        raise OverlapError("sequence visits a node more than once")
    for i in range(len(nodes) - 1):
        if not _adjacent_values(dim, nodes[i].value, nodes[i + 1].value):
            raise AdjacencyError(
                f"nodes {nodes[i].bits} and {nodes[i + 1].bits} (positions {i}, {i + 1}) "
                "are not adjacent"
            )
    if closed and not _adjacent_values(dim, nodes[-1].value, nodes[0].value):
        raise AdjacencyError(f"closing edge {nodes[-1].bits} .. {nodes[0].bits} is not an edge")


def _edge_values(nodes: tuple[NodeLabel, ...], *, closed: bool) -> frozenset[tuple[int, int]]:
    vals = [node.value for node in nodes]
    if closed:
        vals.append(vals[0])
    return frozenset(
        (u, v) if u < v else (v, u) for u, v in zip(vals, vals[1:])
    )


@dataclass(frozen=True)
class Path:
    """A sequence of distinct, consecutively adjacent nodes.

    The empty path is allowed as a concatenation identity; it has no
    dimension and no end nodes.
    """

    nodes: tuple[NodeLabel, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if self.nodes:
            _check_nodes(self.nodes, closed=False)

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    @property
    def dim(self) -> int:
        if not self.nodes:
            raise LtqError("empty path has no dimension")
        return self.nodes[0].dim

    @property
    def start(self) -> NodeLabel:
        if not self.nodes:
            raise LtqError("empty path has no start")
        return self.nodes[0]

    @property
    def end(self) -> NodeLabel:
        if not self.nodes:
            raise LtqError("empty path has no end")
        return self.nodes[-1]

    def edge_set(self) -> frozenset[Edge]:
        dim = self.dim if self.nodes else 0
        return frozenset(
            Edge(NodeLabel(dim, u), NodeLabel(dim, v)) for u, v in self._edge_values()
        )

    def _edge_values(self) -> frozenset[tuple[int, int]]:
        if len(self.nodes) < 2:
            return frozenset()
        return _edge_values(self.nodes, closed=False)


@dataclass(frozen=True)
class Cycle:
    """A closed tour of at least three distinct nodes, stored canonically.

    Canonical form: the rotation starts at the minimum-value node, and of
    the two traversal directions the one with the smaller second node is
    kept. Construction from any rotation or direction yields the same
    object, so value comparison and golden files are stable.
    """

    nodes: tuple[NodeLabel, ...]

    def __post_init__(self) -> None:
        nodes = tuple(self.nodes)
        if len(nodes) < 3:
            raise LtqError(f"a cycle needs at least 3 nodes, got {len(nodes)}")
        _check_nodes(nodes, closed=True)
        at = min(range(len(nodes)), key=lambda i: nodes[i].value)
        nodes = nodes[at:] + nodes[:at]
        if nodes[-1].value < nodes[1].value:
            nodes = nodes[:1] + nodes[:0:-1]
        object.__setattr__(self, "nodes", nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    @property
    def dim(self) -> int:
        return self.nodes[0].dim

    def edge_set(self) -> frozenset[Edge]:
        dim = self.dim
        return frozenset(
            Edge(NodeLabel(dim, u), NodeLabel(dim, v)) for u, v in self._edge_values()
        )

    def _edge_values(self) -> frozenset[tuple[int, int]]:
        return _edge_values(self.nodes, closed=True)


@dataclass(frozen=True)
class HamiltonianPair:
    """Two Hamiltonian paths (or cycles) over the same cube, sharing no edge.

    The invariants are enforced at construction, so holding a pair is proof
    it was verified: both members visit all 2**dim nodes exactly once and
    their edge sets are disjoint.
    """

    first: Path | Cycle
    second: Path | Cycle
    dim: int

    def __post_init__(self) -> None:
        if type(self.first) is not type(self.second):
            raise InvalidPairError("pair members must both be paths or both be cycles")
        for member in (self.first, self.second):
            if member.dim != self.dim:
                raise DimensionError(f"member dim {member.dim} does not match pair dim {self.dim}")
            # distinct valid labels, so full count means full coverage
            if len(member) != 1 << self.dim:
                raise InvalidPairError(
                    f"member visits {len(member)} nodes, expected {1 << self.dim}"
                )
        if self.first._edge_values() & self.second._edge_values():
            raise InvalidPairError("pair members share an edge")

    @property
    def kind(self) -> str:
        return "cycles" if isinstance(self.first, Cycle) else "paths"

    @property
    def members(self) -> tuple[Path | Cycle, Path | Cycle]:
        return (self.first, self.second)


def reverse_path(p: Path) -> Path:
    """The same path traversed end to start; the edge set is unchanged."""
    return Path(p.nodes[::-1])


def concat_paths(p: Path, q: Path) -> Path:
    """Join two node-disjoint paths through the edge from end(p) to start(q).

    An empty path on either side is a neutral element.
    """
    if not q.nodes:
        return p
    if not p.nodes:
        return q
    if p.dim != q.dim:
        raise DimensionError(f"cannot concatenate paths of dim {p.dim} and {q.dim}")
    mine = {node.value for node in p.nodes}
    if any(node.value in mine for node in q.nodes):
        raise OverlapError("paths share nodes; concatenation needs disjoint node sets")
    if not _adjacent_values(p.dim, p.end.value, q.start.value):
        raise JunctionError(f"junction {p.end.bits} .. {q.start.bits} is not an edge")
    return Path(p.nodes + q.nodes)


def base_paths_ltq4() -> HamiltonianPair:
    """The explicit edge-disjoint Hamiltonian path pair seeding the induction.

    First path runs 0010 -> 0000, second runs 0110 -> 0100; both visit all
    16 nodes of the 4-dimensional cube and share no edge.
    """
    first = Path(tuple(make_label(4, b) for b in _BASE_FIRST))
    second = Path(tuple(make_label(4, b) for b in _BASE_SECOND))
    return HamiltonianPair(first, second, 4)


def expected_endpoints(dim: int) -> tuple[NodeLabel, NodeLabel, NodeLabel, NodeLabel]:
    """(start, end) of the first and second constructed paths, in order.

    Dimension 4 uses the seed's end nodes; from dimension 5 on the pattern
    is 00 0^(dim-5) 010 -> 10 0^(dim-5) 010 and 00 0^(dim-5) 110 ->
    10 0^(dim-5) 110, each pair joined by a twist edge.
    """
    if dim < 4:
        raise DimensionError(f"no constructed pair below dim 4, got {dim}")
    if dim == 4:
        names = ("0010", "0000", "0110", "0100")
    else:
        pad = repeat_bits("0", dim - 5)
        names = ("00" + pad + "010", "10" + pad + "010", "00" + pad + "110", "10" + pad + "110")
    labels = tuple(make_label(dim, name) for name in names)
    return labels[0], labels[1], labels[2], labels[3]


def _prefixed(path: Path, lead: int, dim: int) -> Path:
    top = lead << (dim - 1)
    return Path(tuple(NodeLabel(dim, node.value | top) for node in path.nodes))


def _double_dimension(path: Path, dim: int) -> Path:
    """Lift a (dim-1)-dimensional path into dimension `dim`.

    The 0-half copy is followed by the reversed 1-half copy; the junction
    is the twist edge joining the two copies' old end nodes.
    """
    lower = _prefixed(path, 0, dim)
    upper = _prefixed(path, 1, dim)
    return concat_paths(lower, reverse_path(upper))


def edh_paths(dim: int) -> HamiltonianPair:
    """Two edge-disjoint Hamiltonian paths of the dim-dimensional cube.

    End nodes match `expected_endpoints(dim)`. Built iteratively from the
    dimension-4 seed, reusing each level's paths for the next.
    """
    if dim < 4:
        raise DimensionError(
            f"dim {dim} has no edge-disjoint Hamiltonian pair: every node of the"
            " 3-dimensional cube is incident to only three edges"
        )
    pair = base_paths_ltq4()
    first, second = pair.first, pair.second
    for n in range(5, dim + 1):
        first = _double_dimension(first, n)
        second = _double_dimension(second, n)
    return HamiltonianPair(first, second, dim)


def edh_cycles(dim: int) -> HamiltonianPair:
    """Two edge-disjoint Hamiltonian cycles of the dim-dimensional cube.

    Each path of `edh_paths(dim)` closes through its start-end twist edge;
    the two closing edges are distinct and unused by either path, which the
    pair invariants re-verify on construction.
    """
    paths = edh_paths(dim)
    return HamiltonianPair(Cycle(paths.first.nodes), Cycle(paths.second.nodes), dim)
