import pytest
from hypothesis import given
from hypothesis import strategies as st

from ltqcube import (
    Cycle,
    DimensionError,
    HamiltonianPair,
    InvalidPairError,
    JunctionError,
    LtqError,
    OverlapError,
    Path,
    base_paths_ltq4,
    concat_paths,
    edges,
    edh_cycles,
    edh_paths,
    expected_endpoints,
    is_adjacent,
    make_label,
    reverse_path,
)

FIRST_SEED = (
    "0010", "0110", "0111", "0101", "0100", "1100", "1110", "1010",
    "1000", "1001", "1011", "1101", "1111", "0011", "0001", "0000",
)
SECOND_SEED = (
    "0110", "1110", "1111", "1001", "0101", "0011", "0010", "1010",
    "1011", "0111", "0001", "1101", "1100", "1000", "0000", "0100",
)


def path_of(dim, *bits):
    return Path(tuple(make_label(dim, b) for b in bits))


class TestPathType:
    def test_rejects_non_adjacent_step(self):
        with pytest.raises(LtqError):
            path_of(4, "0000", "0101")

    def test_rejects_duplicates(self):
        with pytest.raises(OverlapError):
            path_of(4, "0000", "0001", "0000")

    def test_rejects_mixed_dims(self):
        with pytest.raises(DimensionError):
            Path((make_label(4, "0000"), make_label(5, "00001")))

    def test_accessors(self):
        p = path_of(4, "0010", "0000", "0001")
        assert p.start == make_label(4, "0010")
        assert p.end == make_label(4, "0001")
        assert p.dim == 4 and len(p) == 3

    def test_empty_path_has_no_ends(self):
        empty = Path(())
        with pytest.raises(LtqError):
            empty.start
        with pytest.raises(LtqError):
            empty.dim


class TestCycleType:
    def test_canonical_rotation_and_direction(self):
        base = ("0000", "0001", "0011", "0010")
        rotations = [base[i:] + base[:i] for i in range(4)]
        reversals = [tuple(reversed(r)) for r in rotations]
        canon = {Cycle(tuple(make_label(4, b) for b in seq)).nodes
                 for seq in rotations + reversals}
        assert len(canon) == 1
        (nodes,) = canon
        assert nodes[0].value == min(n.value for n in nodes)
        assert nodes[1].value < nodes[-1].value

    def test_rejects_short_cycle(self):
        with pytest.raises(LtqError):
            Cycle((make_label(2, "00"), make_label(2, "01")))

    def test_rejects_broken_closure(self):
        # 0000..0100 is a fine open path but 0100 is not adjacent to 0001
        with pytest.raises(LtqError):
            Cycle(tuple(make_label(4, b) for b in ("0001", "0000", "0100")))


class TestReverseAndConcat:
    def test_reverse_swaps_ends_and_keeps_edges(self):
        p = path_of(4, *FIRST_SEED)
        r = reverse_path(p)
        assert r.start == p.end and r.end == p.start
        assert r.edge_set() == p.edge_set()
        assert reverse_path(r) == p

    def test_single_node_reverses_to_itself(self):
        p = path_of(4, "0101")
        assert reverse_path(p) == p

    def test_concat_requires_adjacent_junction(self):
        with pytest.raises(JunctionError):
            concat_paths(path_of(5, "00010"), path_of(5, "10110"))

    def test_concat_requires_disjoint_nodes(self):
        with pytest.raises(OverlapError):
            concat_paths(path_of(4, "0000", "0001"), path_of(4, "0011", "0001"))

    def test_concat_empty_is_neutral(self):
        p = path_of(4, "0000", "0001")
        assert concat_paths(p, Path(())) == p
        assert concat_paths(Path(()), p) == p

    def test_concat_edge_set_is_union_plus_junction(self):
        p = path_of(4, "0010", "0110", "0111")
        q = path_of(4, "0101", "0100", "1100")
        joined = concat_paths(p, q)
        junction = {e for e in edges(4) if {e.a.bits, e.b.bits} == {"0111", "0101"}}
        assert joined.edge_set() == p.edge_set() | q.edge_set() | junction

    @given(st.integers(1, 15))
    def test_concat_recovers_any_split_of_the_seed(self, cut):
        whole = path_of(4, *FIRST_SEED)
        head = Path(whole.nodes[:cut])
        tail = Path(whole.nodes[cut:])
        assert concat_paths(head, tail) == whole


class TestBasePair:
    def test_exact_node_sequences(self):
        pair = base_paths_ltq4()
        assert tuple(n.bits for n in pair.first.nodes) == FIRST_SEED
        assert tuple(n.bits for n in pair.second.nodes) == SECOND_SEED

    def test_endpoints(self):
        pair = base_paths_ltq4()
        assert (pair.first.start.bits, pair.first.end.bits) == ("0010", "0000")
        assert (pair.second.start.bits, pair.second.end.bits) == ("0110", "0100")

    def test_sizes_and_disjointness(self):
        pair = base_paths_ltq4()
        for member in pair.members:
            assert len(member) == 16
            assert len(member.edge_set()) == 15
        assert not pair.first.edge_set() & pair.second.edge_set()

    def test_sixth_edge_of_first_path(self):
        pair = base_paths_ltq4()
        fifth, sixth = pair.first.nodes[5], pair.first.nodes[6]
        assert {pair.first.nodes[4].bits, fifth.bits} == {"0100", "1100"}
        assert is_adjacent(fifth, sixth)


class TestExpectedEndpoints:
    def test_dim_4_seed_endpoints(self):
        got = tuple(n.bits for n in expected_endpoints(4))
        assert got == ("0010", "0000", "0110", "0100")

    def test_dim_5(self):
        got = tuple(n.bits for n in expected_endpoints(5))
        assert got == ("00010", "10010", "00110", "10110")

    def test_dim_6(self):
        got = tuple(n.bits for n in expected_endpoints(6))
        assert got == ("000010", "100010", "000110", "100110")

    @pytest.mark.parametrize("dim", range(5, 13))
    def test_each_start_end_pair_is_an_edge(self, dim):
        start_f, end_f, start_s, end_s = expected_endpoints(dim)
        assert is_adjacent(start_f, end_f)
        assert is_adjacent(start_s, end_s)

    def test_below_dim_4(self):
        with pytest.raises(DimensionError):
            expected_endpoints(3)


class TestConstructedPaths:
    def test_dim_5_shape(self):
        pair = edh_paths(5)
        assert len(pair.first) == 32
        assert pair.first.start.bits == "00010"
        assert pair.first.end.bits == "10010"
        assert pair.second.start.bits == "00110"
        assert pair.second.end.bits == "10110"

    def test_junction_nodes_of_the_lift(self):
        # the dim-4 end nodes meet across the twist edge once lifted
        assert is_adjacent(make_label(5, "00000"), make_label(5, "10000"))
        assert is_adjacent(make_label(5, "00100"), make_label(5, "10100"))

    @pytest.mark.parametrize("dim", range(4, 13))
    def test_endpoints_match_formula(self, dim):
        pair = edh_paths(dim)
        start_f, end_f, start_s, end_s = expected_endpoints(dim)
        assert (pair.first.start, pair.first.end) == (start_f, end_f)
        assert (pair.second.start, pair.second.end) == (start_s, end_s)

    @pytest.mark.parametrize("dim", range(5, 11))
    def test_lower_half_is_previous_level(self, dim):
        below = edh_paths(dim - 1)
        pair = edh_paths(dim)
        half = 1 << (dim - 1)
        for small, big in zip(below.members, pair.members):
            assert [n.value for n in big.nodes[:half]] == [n.value for n in small.nodes]

    def test_below_dim_4(self):
        with pytest.raises(DimensionError):
            edh_paths(3)


class TestConstructedCycles:
    @pytest.mark.parametrize("dim,first_close,second_close", [
        (4, ("0010", "0000"), ("0110", "0100")),
        (5, ("00010", "10010"), ("00110", "10110")),
    ])
    def test_closing_edges_present(self, dim, first_close, second_close):
        paths = edh_paths(dim)
        cycles = edh_cycles(dim)
        for member_path, member_cycle, close in zip(
            paths.members, cycles.members, (first_close, second_close)
        ):
            closing = {e for e in edges(dim) if {e.a.bits, e.b.bits} == set(close)}
            assert closing <= member_cycle.edge_set()
            assert not closing & member_path.edge_set()
            assert member_cycle.edge_set() == member_path.edge_set() | closing

    @pytest.mark.parametrize("dim", range(4, 11))
    def test_cycle_pair_shape(self, dim):
        pair = edh_cycles(dim)
        union = pair.first.edge_set() | pair.second.edge_set()
        assert len(pair.first) == len(pair.second) == 1 << dim
        assert len(union) == 2 << dim
        assert union <= edges(dim)

    def test_canonical_form(self):
        pair = edh_cycles(6)
        for member in pair.members:
            assert member.nodes[0].value == 0
            assert member.nodes[1].value < member.nodes[-1].value


class TestHamiltonianPairType:
    def test_rejects_shared_edges(self):
        cycle = edh_cycles(4).first
        with pytest.raises(InvalidPairError):
            HamiltonianPair(cycle, cycle, 4)

    def test_rejects_partial_coverage(self):
        a = Path(tuple(make_label(4, b) for b in ("0000", "0001")))
        b = Path(tuple(make_label(4, b) for b in ("0011", "0010")))
        with pytest.raises(InvalidPairError):
            HamiltonianPair(a, b, 4)

    def test_rejects_mixed_kinds(self):
        pair = edh_paths(4)
        with pytest.raises(InvalidPairError):
            HamiltonianPair(pair.first, Cycle(pair.second.nodes), 4)

    def test_kind_reporting(self):
        assert edh_paths(4).kind == "paths"
        assert edh_cycles(4).kind == "cycles"
