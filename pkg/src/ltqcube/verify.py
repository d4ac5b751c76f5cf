"""Independent checkers and small-scale exhaustive oracles.

Everything here re-derives its verdicts from raw node sequences and the
adjacency rule; nothing trusts the construction module. The enumeration
engine exhaustively lists Hamiltonian cycles at desk scale (dim <= 4
without a limit) and doubles as a bounded search over residual edges for
the open question of a third edge-disjoint cycle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .construction import Cycle, HamiltonianPair, Path, edh_cycles
from .errors import DimensionError, InvalidPairError, LtqError, OracleScopeError
from .topology import MAX_DIM, Edge, NodeLabel, _adjacent_values, _neighbor_values, edges

#: Default node-expansion budget for the bounded third-cycle search.
DEFAULT_SEARCH_BUDGET = 10_000_000


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Named pass/fail checks about one subject; passes iff all checks do."""

    subject: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def lines(self) -> list[str]:
        out = [f"subject: {self.subject}"]
        for check in self.checks:
            mark = "PASS" if check.passed else "FAIL"
            suffix = f": {check.detail}" if check.detail else ""
            out.append(f"[{mark}] {check.name}{suffix}")
        out.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return out

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
            "passed": self.passed,
        }


def _node_list(obj: Path | Cycle | Sequence[NodeLabel]) -> tuple[NodeLabel, ...]:
    if isinstance(obj, (Path, Cycle)):
        return obj.nodes
    return tuple(obj)


def _sequence_checks(dim: int, nodes: tuple[NodeLabel, ...], *, closed: bool) -> list[CheckResult]:
    checks = []
    expected = 1 << dim
    checks.append(
        CheckResult("node count", len(nodes) == expected, f"{len(nodes)} of {expected}")
    )
    bad_dim = [n for n in nodes if n.dim != dim]
    checks.append(
        CheckResult(
            "label dimensions",
            not bad_dim,
            "" if not bad_dim else f"{len(bad_dim)} labels of wrong dim",
        )
    )
    if bad_dim:
        return checks
    values = [n.value for n in nodes]
    dupes = [v for v, c in Counter(values).items() if c > 1]
    checks.append(
        CheckResult(
            "nodes distinct",
            not dupes,
            "" if not dupes else f"repeated: {NodeLabel(dim, dupes[0]).bits}",
        )
    )
    broken = [
        i for i in range(len(nodes) - 1) if not _adjacent_values(dim, values[i], values[i + 1])
    ]
    checks.append(
        CheckResult(
            "consecutive adjacency",
            not broken,
            ""
            if not broken
            else f"{nodes[broken[0]].bits} .. {nodes[broken[0] + 1].bits} at position {broken[0]}",
        )
    )
    if closed:
        closes = len(nodes) >= 3 and _adjacent_values(dim, values[-1], values[0])
        checks.append(
            CheckResult(
                "closing edge",
                closes,
                "" if closes else f"{nodes[-1].bits} .. {nodes[0].bits} is not an edge",
            )
        )
    return checks


def is_hamiltonian_path(dim: int, p: Path | Sequence[NodeLabel]) -> bool:
    """True iff `p` visits every node of the dim-cube exactly once along edges.

    Never raises on well-typed input; broken sequences simply fail.
    """
    return all(c.passed for c in _sequence_checks(dim, _node_list(p), closed=False))


def is_hamiltonian_cycle(dim: int, c: Cycle | Sequence[NodeLabel]) -> bool:
    """As `is_hamiltonian_path`, plus the closing edge back to the start."""
    return all(c.passed for c in _sequence_checks(dim, _node_list(c), closed=True))


def _edge_value_set(obj: Path | Cycle | Sequence[NodeLabel]) -> frozenset[tuple[int, int]]:
    if isinstance(obj, (Path, Cycle)):
        return obj._edge_values()
    values = [n.value for n in obj]
    return frozenset((u, v) if u < v else (v, u) for u, v in zip(values, values[1:]))


def are_edge_disjoint(
    a: Path | Cycle | Sequence[NodeLabel], b: Path | Cycle | Sequence[NodeLabel]
) -> bool:
    """True iff the two walks share no edge, regardless of direction."""
    nodes_a, nodes_b = _node_list(a), _node_list(b)
    if nodes_a and nodes_b and nodes_a[0].dim != nodes_b[0].dim:
        raise DimensionError("cannot compare walks of different dimensions")
    return _edge_value_set(a).isdisjoint(_edge_value_set(b))


def verify_pair(
    dim: int,
    first: Path | Cycle | Sequence[NodeLabel],
    second: Path | Cycle | Sequence[NodeLabel],
    kind: str = "cycles",
) -> VerificationReport:
    """Run every checker over a claimed Hamiltonian pair and report by name."""
    if kind not in ("paths", "cycles"):
        raise LtqError(f"kind must be 'paths' or 'cycles', got {kind!r}")
    closed = kind == "cycles"
    checks: list[CheckResult] = []
    for tag, member in (("first", first), ("second", second)):
        for check in _sequence_checks(dim, _node_list(member), closed=closed):
            checks.append(CheckResult(f"{tag}: {check.name}", check.passed, check.detail))
    first_edges = _edge_value_set(first) | (
        _closure_edge(first) if closed else frozenset()
    )
    second_edges = _edge_value_set(second) | (
        _closure_edge(second) if closed else frozenset()
    )
    shared = first_edges & second_edges
    detail = ""
    if shared:
        u, v = sorted(shared)[0]
        detail = f"{len(shared)} shared, e.g. {NodeLabel(dim, u).bits} .. {NodeLabel(dim, v).bits}"
    checks.append(CheckResult("pair: edge-disjoint", not shared, detail))
    return VerificationReport(f"{kind} pair, dim {dim}", tuple(checks))


def _closure_edge(obj: Path | Cycle | Sequence[NodeLabel]) -> frozenset[tuple[int, int]]:
    nodes = _node_list(obj)
    if isinstance(obj, Cycle) or len(nodes) < 2:
        return frozenset()  # Cycle edge values already include the closure
    u, v = nodes[-1].value, nodes[0].value
    return frozenset({(u, v) if u < v else (v, u)})


def _search_cycles(
    adjacency: dict[int, Sequence[int]],
    *,
    limit: int | None = None,
    budget: int | None = None,
) -> tuple[list[tuple[int, ...]], bool]:
    """Backtracking Hamiltonian-cycle search over an integer adjacency map.

    Anchored at the smallest node, extending toward the smallest unvisited
    neighbor first, so the output order is deterministic. Each undirected
    cycle is emitted exactly once, oriented with its second node smaller
    than its last. A branch is pruned when some unvisited node retains
    fewer than two usable connections (unvisited nodes, the current tail,
    or the anchor). Returns (cycles, exhausted); `exhausted` is True when
    the node-expansion budget ran out before the search space did.
    """
    n = len(adjacency)
    found: list[tuple[int, ...]] = []
    if n < 3:
        return found, False
    order = {v: tuple(sorted(ws)) for v, ws in adjacency.items()}
    adj_mask = {v: sum(1 << w for w in ws) for v, ws in order.items()}
    full_mask = sum(1 << v for v in order)
    anchor = min(order)
    anchor_bit = 1 << anchor

    path = [anchor]
    visited = anchor_bit
    unvisited = set(order)
    unvisited.discard(anchor)
    stack: list[Iterator[int]] = [iter(order[anchor])]
    expansions = 0
    exhausted = False

    def viable(tail: int) -> bool:
        avail = (full_mask & ~visited) | (1 << tail) | anchor_bit
        return all((adj_mask[u] & avail).bit_count() >= 2 for u in unvisited)

    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            if stack:
                done = path.pop()
                visited ^= 1 << done
                unvisited.add(done)
            continue
        if visited >> step & 1:
            continue
        expansions += 1
        if budget is not None and expansions > budget:
            exhausted = True
            break
        path.append(step)
        if len(path) == n:
            if adj_mask[step] & anchor_bit and path[1] < path[-1]:
                found.append(tuple(path))
                if limit is not None and len(found) >= limit:
                    break
            path.pop()
            continue
        visited |= 1 << step
        unvisited.discard(step)
        if viable(step):
            stack.append(iter(order[step]))
        else:
            path.pop()
            visited ^= 1 << step
            unvisited.add(step)
    return found, exhausted


def enumerate_hamiltonian_cycles(dim: int, limit: int | None = None) -> list[Cycle]:
    """All Hamiltonian cycles of the dim-cube, canonical, deterministic order.

    Exhaustive only for dim <= 4 (at most 16 nodes); beyond that an
    explicit `limit` is required and the enumeration stops early.
    """
    if not 2 <= dim <= MAX_DIM:
        raise DimensionError(f"dim must be in [2, {MAX_DIM}], got {dim}")
    if dim > 4 and limit is None:
        raise OracleScopeError(
            f"exhaustive enumeration is guarded at dim <= 4; pass limit= for dim {dim}"
        )
    if limit is not None and limit < 1:
        raise LtqError(f"limit must be >= 1, got {limit}")
    adjacency = {v: _neighbor_values(dim, v) for v in range(1 << dim)}
    raw, _ = _search_cycles(adjacency, limit=limit)
    return [Cycle(tuple(NodeLabel(dim, v) for v in cycle)) for cycle in raw]


@dataclass(frozen=True)
class PairExistence:
    """Outcome of the exhaustive two-disjoint-cycles question at one dim."""

    dim: int
    exists: bool
    witness: HamiltonianPair | None
    certificates: tuple[str, ...]


def exists_two_edge_disjoint_hc(dim: int) -> PairExistence:
    """Decide, exhaustively, whether two edge-disjoint Hamiltonian cycles exist.

    Guarded to dim 3 and 4. Dimension 3 is refuted two independent ways:
    the degree argument (two edge-disjoint cycles need degree >= 4 at every
    node, but the graph is 3-regular) and a scan over every pair of
    enumerated Hamiltonian cycles. Dimension 4 is confirmed with the
    constructed pair as witness.
    """
    if dim not in (3, 4):
        raise OracleScopeError(f"exhaustive pair existence is guarded to dim 3 and 4, got {dim}")
    if dim == 3:
        degrees = {len(set(_neighbor_values(3, v))) for v in range(8)}
        assert degrees == {3}
        cycles = enumerate_hamiltonian_cycles(3)
        disjoint = sum(1 for a, b in combinations(cycles, 2) if are_edge_disjoint(a, b))
        certificates = (
            "degree argument: two edge-disjoint Hamiltonian cycles need degree >= 4 "
            "at every node; every node here has degree 3",
            f"exhaustive scan: {len(cycles)} Hamiltonian cycles, "
            f"{disjoint} edge-disjoint pairs among {len(cycles) * (len(cycles) - 1) // 2}",
        )
        if disjoint:
            raise AssertionError("degree argument and exhaustive scan disagree")
        return PairExistence(3, False, None, certificates)

    pair = edh_cycles(4)
    ok = (
        is_hamiltonian_cycle(4, pair.first)
        and is_hamiltonian_cycle(4, pair.second)
        and are_edge_disjoint(pair.first, pair.second)
    )
    if not ok:
        raise AssertionError("constructed witness failed its own checkers")
    certificates = (
        "constructive: the dimension-4 pair closes into two Hamiltonian cycles",
        "checkers: both members Hamiltonian, edge sets disjoint",
    )
    return PairExistence(4, True, pair, certificates)


@dataclass(frozen=True)
class ResidualAnalysis:
    """What remains of the cube once both constructed cycles are removed."""

    dim: int
    unused_edges: frozenset[Edge]
    degree_histogram: dict[int, int] = field(compare=False)
    third_cycle_found: Cycle | None = None
    search_budget: int | None = None

    def __post_init__(self) -> None:
        expected = (self.dim << (self.dim - 1)) - (1 << (self.dim + 1))
        if len(self.unused_edges) != expected:
            raise InvalidPairError(
                f"residual has {len(self.unused_edges)} edges, expected {expected}"
            )
        if self.degree_histogram != {self.dim - 4: 1 << self.dim}:
            raise InvalidPairError("residual graph is not uniformly (dim - 4)-regular")


def residual_analysis(
    dim: int, pair: HamiltonianPair, *, search_budget: int | None = None
) -> ResidualAnalysis:
    """Edges unused by a verified cycle pair, their degrees, and optionally
    a bounded hunt for a third edge-disjoint Hamiltonian cycle among them.
    """
    if pair.kind != "cycles":
        raise InvalidPairError("residual analysis needs a pair of cycles")
    if pair.dim != dim:
        raise DimensionError(f"pair dim {pair.dim} does not match {dim}")
    used = pair.first._edge_values() | pair.second._edge_values()
    unused = frozenset(e for e in edges(dim) if (e.a.value, e.b.value) not in used)
    degree: Counter[int] = Counter()
    for e in unused:
        degree[e.a.value] += 1
        degree[e.b.value] += 1
    histogram = Counter(degree[v] for v in range(1 << dim))
    third = None
    if search_budget is not None:
        third = search_third_cycle(dim, unused, budget=search_budget)
    return ResidualAnalysis(dim, unused, dict(histogram), third, search_budget)


def search_third_cycle(
    dim: int, residual: Iterable[Edge], budget: int = DEFAULT_SEARCH_BUDGET
) -> Cycle | None:
    """Bounded backtracking search for a Hamiltonian cycle using only the
    given residual edges.

    Returns the first cycle found within the node-expansion budget, else
    None. No result is not a non-existence proof, except trivially: any
    node of residual degree < 2 rules a cycle out immediately.
    """
    if budget <= 0:
        raise LtqError(f"budget must be positive, got {budget}")
    adjacency: dict[int, list[int]] = {v: [] for v in range(1 << dim)}
    for e in set(residual):
        if e.dim != dim:
            raise DimensionError(f"residual edge of dim {e.dim} in a dim-{dim} search")
        adjacency[e.a.value].append(e.b.value)
        adjacency[e.b.value].append(e.a.value)
    if any(len(ws) < 2 for ws in adjacency.values()):
        return None
    raw, _ = _search_cycles(adjacency, limit=1, budget=budget)
    if not raw:
        return None
    return Cycle(tuple(NodeLabel(dim, v) for v in raw[0]))
