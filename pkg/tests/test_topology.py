import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ltqcube import (
    DimensionError,
    Edge,
    LabelFormatError,
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


def labels(min_dim=2, max_dim=10):
    return st.integers(min_dim, max_dim).flatmap(
        lambda d: st.builds(NodeLabel, st.just(d), st.integers(0, (1 << d) - 1))
    )


class TestMakeLabel:
    def test_positional_reading(self):
        assert make_label(4, "0010").value == 2
        assert make_label(4, "1111").value == 15
        assert make_label(5, "10110").value == 22

    def test_bits_round_trip(self):
        assert make_label(6, "000110").bits == "000110"
        assert str(NodeLabel(5, 22)) == "10110"

    def test_wrong_length(self):
        with pytest.raises(LabelFormatError):
            make_label(4, "001")

    def test_illegal_character(self):
        with pytest.raises(LabelFormatError):
            make_label(4, "00x1")

    def test_dim_bounds(self):
        with pytest.raises(DimensionError):
            NodeLabel(1, 0)
        with pytest.raises(DimensionError):
            NodeLabel(31, 0)
        with pytest.raises(LabelFormatError):
            NodeLabel(4, 16)


class TestRepeatBits:
    def test_pattern_twice(self):
        assert repeat_bits("10", 2) == "1010"

    def test_zero_string(self):
        assert repeat_bits("0", 3) == "000"

    def test_zero_repetitions(self):
        assert repeat_bits("1", 0) == ""

    def test_rejects_non_binary(self):
        with pytest.raises(LabelFormatError):
            repeat_bits("2", 1)


class TestCrossNeighbor:
    def test_known_values(self):
        assert cross_neighbor(make_label(4, "0011")) == make_label(4, "1111")
        assert cross_neighbor(make_label(4, "0000")) == make_label(4, "1000")
        assert cross_neighbor(make_label(5, "00000")) == make_label(5, "10000")

    def test_dim_2_has_no_twist(self):
        with pytest.raises(DimensionError):
            cross_neighbor(make_label(2, "00"))

    @pytest.mark.parametrize("dim", range(3, 15))
    def test_involution_exhaustive(self, dim):
        for v in range(1 << dim):
            x = NodeLabel(dim, v)
            assert cross_neighbor(cross_neighbor(x)) == x

    @pytest.mark.parametrize("dim", range(3, 11))
    def test_flips_subcube(self, dim):
        for v in range(1 << dim):
            x = NodeLabel(dim, v)
            assert subcube_of(cross_neighbor(x)) == 1 - subcube_of(x)


class TestNeighbors:
    def test_all_zero_label(self):
        got = neighbors(make_label(4, "0000"))
        assert got == {make_label(4, b) for b in ("0001", "0010", "0100", "1000")}

    def test_dim_2_four_cycle(self):
        assert neighbors(make_label(2, "00")) == {make_label(2, "01"), make_label(2, "10")}

    def test_0011_against_recursive_definition(self):
        # Frozen from neighbors_recursive: 0011 twists to 1111 at the top
        # level and to 0101 one level down; 0111 is NOT adjacent.
        x = make_label(4, "0011")
        expected = {make_label(4, b) for b in ("0001", "0010", "0101", "1111")}
        assert neighbors_recursive(x) == expected
        assert neighbors(x) == expected

    def test_recursive_base_level(self):
        got = neighbors_recursive(make_label(3, "000"))
        assert got == {make_label(3, b) for b in ("001", "010", "100")}

    def test_recursive_contains_twist_partner(self):
        assert make_label(4, "1110") in neighbors_recursive(make_label(4, "0110"))

    @pytest.mark.parametrize("dim", range(2, 11))
    def test_closed_form_equals_recursion_exhaustive(self, dim):
        for v in range(1 << dim):
            x = NodeLabel(dim, v)
            assert neighbors(x) == neighbors_recursive(x)

    @pytest.mark.parametrize("dim", range(2, 13))
    def test_regular_of_degree_dim(self, dim):
        for v in range(1 << dim):
            x = NodeLabel(dim, v)
            got = neighbors(x)
            assert len(got) == dim
            assert x not in got

    @pytest.mark.parametrize("dim", (13, 14))
    def test_regular_of_degree_dim_sampled(self, dim):
        for v in range(0, 1 << dim, 37):
            x = NodeLabel(dim, v)
            got = neighbors(x)
            assert len(got) == dim
            assert x not in got

    @given(labels())
    def test_symmetry(self, x):
        for y in neighbors(x):
            assert x in neighbors(y)
            assert is_adjacent(x, y) and is_adjacent(y, x)

    @pytest.mark.parametrize("dim", range(2, 11))
    def test_symmetry_exhaustive(self, dim):
        for v in range(1 << dim):
            x = NodeLabel(dim, v)
            for y in neighbors(x):
                assert x in neighbors(y)

    @given(labels(min_dim=3, max_dim=12))
    def test_twist_partner_is_a_neighbor(self, x):
        assert cross_neighbor(x) in neighbors(x)


class TestIsAdjacent:
    def test_known_edges(self):
        assert is_adjacent(make_label(4, "0100"), make_label(4, "1100"))
        assert is_adjacent(make_label(4, "0010"), make_label(4, "0000"))

    def test_no_self_loops(self):
        x = make_label(4, "0000")
        assert not is_adjacent(x, x)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            is_adjacent(make_label(4, "0000"), make_label(5, "00000"))


class TestEdges:
    @pytest.mark.parametrize("dim,count", [(2, 4), (4, 32), (5, 80)])
    def test_counts(self, dim, count):
        assert len(edges(dim)) == count

    @pytest.mark.parametrize("dim", range(2, 15))
    def test_count_formula(self, dim):
        assert len(edges(dim)) == dim * 2 ** (dim - 1)

    def test_canonical_order(self):
        assert all(e.a.value < e.b.value for e in edges(5))

    def test_edge_normalizes_order(self):
        hi, lo = make_label(4, "1000"), make_label(4, "0000")
        e = Edge(hi, lo)
        assert (e.a, e.b) == (lo, hi)

    def test_out_of_range(self):
        with pytest.raises(DimensionError):
            edges(1)
        with pytest.raises(DimensionError):
            edges(31)


class TestSubcube:
    def test_msb_read(self):
        assert subcube_of(make_label(4, "0010")) == 0
        assert subcube_of(make_label(5, "10110")) == 1

    def test_requires_dim_3(self):
        with pytest.raises(DimensionError):
            subcube_of(make_label(2, "01"))


class TestSuccessiveBits:
    def test_two_successive_bits(self):
        assert successive_bits_property(make_label(4, "0011"), make_label(4, "1111"))

    def test_non_successive_bits(self):
        assert not successive_bits_property(make_label(4, "0000"), make_label(4, "0101"))

    def test_equal_labels(self):
        x = make_label(4, "1010")
        assert successive_bits_property(x, x)

    @pytest.mark.parametrize("dim", range(2, 11))
    def test_every_edge_satisfies_it(self, dim):
        for e in edges(dim):
            assert successive_bits_property(e.a, e.b)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            successive_bits_property(make_label(4, "0000"), make_label(5, "00000"))


class TestLtqGraph:
    def test_counts(self):
        g = LtqGraph(6)
        assert g.vertex_count == 64
        assert g.edge_count == 192
        assert sum(1 for _ in g.vertices()) == 64

    def test_delegation(self):
        g = LtqGraph(4)
        x = make_label(4, "0011")
        assert g.neighbors(x) == neighbors(x)
        assert g.is_adjacent(x, make_label(4, "0001"))
        assert g.edges() == edges(4)

    def test_rejects_foreign_labels(self):
        g = LtqGraph(4)
        with pytest.raises(DimensionError):
            g.neighbors(make_label(5, "00000"))


@settings(max_examples=60)
@given(labels(max_dim=9))
def test_adjacent_labels_differ_in_successive_bits(x):
    for y in neighbors(x):
        assert successive_bits_property(x, y)
