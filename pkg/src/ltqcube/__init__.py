"""Locally twisted cubes: topology, edge-disjoint Hamiltonian cycle pairs,
independent verification, and ring-broadcast simulation."""

from .broadcast import (
    RingSchedule,
    TrafficReport,
    simulate_ring_broadcast,
    simulate_schedules,
    simulate_split_broadcast,
)
from .construction import (
    Cycle,
    HamiltonianPair,
    Path,
    base_paths_ltq4,
    concat_paths,
    edh_cycles,
    edh_paths,
    expected_endpoints,
    reverse_path,
)
from .errors import (
    AdjacencyError,
    DimensionError,
    InvalidPairError,
    JunctionError,
    LabelFormatError,
    LtqError,
    OracleScopeError,
    OverlapError,
)
from .topology import (
    MAX_DIM,
    Edge,
    LtqGraph,
    NodeLabel,
    cross_neighbor,
    edges,
    is_adjacent,
    make_label,
    neighbors,
    neighbors_recursive,
    repeat_bits,
    subcube_of,
    successive_bits_property,
)
from .verify import (
    DEFAULT_SEARCH_BUDGET,
    CheckResult,
    PairExistence,
    ResidualAnalysis,
    VerificationReport,
    are_edge_disjoint,
    enumerate_hamiltonian_cycles,
    exists_two_edge_disjoint_hc,
    is_hamiltonian_cycle,
    is_hamiltonian_path,
    residual_analysis,
    search_third_cycle,
    verify_pair,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyError",
    "CheckResult",
    "Cycle",
    "DEFAULT_SEARCH_BUDGET",
    "DimensionError",
    "Edge",
    "HamiltonianPair",
    "InvalidPairError",
    "JunctionError",
    "LabelFormatError",
    "LtqError",
    "LtqGraph",
    "MAX_DIM",
    "NodeLabel",
    "OracleScopeError",
    "OverlapError",
    "PairExistence",
    "Path",
    "ResidualAnalysis",
    "RingSchedule",
    "TrafficReport",
    "VerificationReport",
    "are_edge_disjoint",
    "base_paths_ltq4",
    "concat_paths",
    "cross_neighbor",
    "edges",
    "edh_cycles",
    "edh_paths",
    "enumerate_hamiltonian_cycles",
    "exists_two_edge_disjoint_hc",
    "expected_endpoints",
    "is_adjacent",
    "is_hamiltonian_cycle",
    "is_hamiltonian_path",
    "make_label",
    "neighbors",
    "neighbors_recursive",
    "repeat_bits",
    "residual_analysis",
    "reverse_path",
    "search_third_cycle",
    "simulate_ring_broadcast",
    "simulate_schedules",
    "simulate_split_broadcast",
    "subcube_of",
    "successive_bits_property",
    "verify_pair",
]
