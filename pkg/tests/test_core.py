import pytest
from hypothesis import given, strategies as st

from convexcodes.core import (
    CCO,
    CO,
    HCCO,
    HCO,
    BitVector,
    Code,
    CodeMultiset,
    DegenerateRow,
    Geometry,
    LengthMismatch,
    SensorMatrix,
    adjacent_column_pairs,
    inharmonious,
    inharmonious_adjacent_pairs,
    is_discrete_interval,
    regime_check,
    row_stats,
)

bit_lists = st.lists(st.integers(0, 1), min_size=0, max_size=12)


class TestBitVector:
    def test_string_round_trip(self):
        for s in ("", "0", "1", "1100", "0111100"):
            assert BitVector.from_string(s).to_string() == s

    def test_position_zero_is_first_character(self):
        w = BitVector.from_string("1100")
        assert [w.bit(i) for i in range(4)] == [1, 1, 0, 0]
        assert w.mask == 0b0011

    def test_immutability_and_hash(self):
        w = BitVector.from_string("101")
        with pytest.raises(AttributeError):
            w.mask = 0
        assert w == BitVector(3, 0b101)
        assert hash(w) == hash(BitVector(3, 0b101))
        assert w != BitVector(4, 0b101)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            BitVector.from_string("10") & BitVector.from_string("100")

    def test_mask_out_of_range(self):
        with pytest.raises(ValueError):
            BitVector(2, 0b100)

    @given(bit_lists, bit_lists)
    def test_boolean_ops_agree_with_listwise(self, a, b):
        n = min(len(a), len(b))
        a, b = a[:n], b[:n]
        x, y = BitVector.from_bits(a), BitVector.from_bits(b)
        assert list(x & y) == [p & q for p, q in zip(a, b)]
        assert list(x | y) == [p | q for p, q in zip(a, b)]
        assert list(x ^ y) == [p ^ q for p, q in zip(a, b)]
        assert list(~x) == [1 - p for p in a]
        assert x.leq(y) == all(p <= q for p, q in zip(a, b))
        assert x.popcount() == sum(a)

    @given(bit_lists)
    def test_zeros_ones_flags(self, a):
        x = BitVector.from_bits(a)
        assert x.is_zero == (sum(a) == 0)
        assert x.is_ones == (sum(a) == len(a))


class TestDiscreteInterval:
    def test_line_examples(self):
        assert is_discrete_interval(BitVector.from_string("0111100"), Geometry.LINE)
        assert is_discrete_interval(BitVector.from_string("0000"), Geometry.LINE)
        assert is_discrete_interval(BitVector.from_string("1111"), Geometry.LINE)
        assert not is_discrete_interval(BitVector.from_string("1011"), Geometry.LINE)
        assert not is_discrete_interval(BitVector.from_string("0101"), Geometry.LINE)

    def test_circle_examples(self):
        assert is_discrete_interval(BitVector.from_string("110001"), Geometry.CIRCLE)
        assert is_discrete_interval(BitVector.from_string("1011"), Geometry.CIRCLE)
        assert not is_discrete_interval(BitVector.from_string("0101"), Geometry.CIRCLE)
        assert not is_discrete_interval(BitVector.from_string("110010"), Geometry.CIRCLE)

    @given(bit_lists)
    def test_against_string_oracle(self, bits):
        w = BitVector.from_bits(bits)
        s = "".join(map(str, bits))
        line_ok = "0" not in s.strip("0")
        assert is_discrete_interval(w, Geometry.LINE) == line_ok
        ones = sum(bits)
        if ones == 0:
            circ_ok = True
        else:
            doubled = s + s
            circ_ok = str("1" * ones) in doubled
        assert is_discrete_interval(w, Geometry.CIRCLE) == circ_ok

    @given(bit_lists)
    def test_line_implies_circle(self, bits):
        w = BitVector.from_bits(bits)
        if is_discrete_interval(w, Geometry.LINE):
            assert is_discrete_interval(w, Geometry.CIRCLE)


class TestRowStats:
    def test_line_example(self):
        # r = 001110 has f = 5 and g = 2
        f, g = row_stats(BitVector.from_string("001110"), Geometry.LINE)
        assert (f, g) == (5, 2)

    def test_circle_wraparound(self):
        f, g = row_stats(BitVector.from_string("110001"), Geometry.CIRCLE)
        assert (f, g) == (2, 5)

    def test_degenerate_rows(self):
        with pytest.raises(DegenerateRow):
            row_stats(BitVector.zeros(4), Geometry.LINE)
        with pytest.raises(DegenerateRow):
            row_stats(BitVector.ones(4), Geometry.CIRCLE)
        # all-one row is fine on the line
        assert row_stats(BitVector.ones(4), Geometry.LINE) == (4, 0)

    def test_non_interval_rejected(self):
        with pytest.raises(ValueError):
            row_stats(BitVector.from_string("0101"), Geometry.LINE)

    @given(bit_lists.filter(lambda b: sum(b) > 0))
    def test_line_stats_determine_row(self, bits):
        w = BitVector.from_bits(bits)
        if not is_discrete_interval(w, Geometry.LINE):
            return
        f, g = row_stats(w, Geometry.LINE)
        rebuilt = BitVector.from_bits(
            1 if g < i + 1 <= f else 0 for i in range(len(bits))
        )
        assert rebuilt == w

    @given(bit_lists.filter(lambda b: 0 < sum(b) < len(b)))
    def test_circle_stats_determine_row(self, bits):
        w = BitVector.from_bits(bits)
        if not is_discrete_interval(w, Geometry.CIRCLE):
            return
        n = len(bits)
        f, g = row_stats(w, Geometry.CIRCLE)
        # the 1-block runs cyclically from position g (0-based) to f-1
        covered = set()
        i = g % n
        while i != f % n:
            covered.add(i)
            i = (i + 1) % n
        rebuilt = BitVector.from_bits(1 if i in covered else 0 for i in range(n))
        assert rebuilt == w


class TestInharmonious:
    def test_examples(self):
        a = BitVector.from_string("1100")
        b = BitVector.from_string("0110")
        assert inharmonious(a, b)
        assert not inharmonious(a, a)
        assert not inharmonious(BitVector.zeros(4), a)
        assert not inharmonious(a, BitVector.ones(4))

    @given(bit_lists, bit_lists)
    def test_matches_order_incomparability(self, a, b):
        n = min(len(a), len(b))
        x, y = BitVector.from_bits(a[:n]), BitVector.from_bits(b[:n])
        assert inharmonious(x, y) == (not x.leq(y) and not y.leq(x))


class TestCodeContainers:
    def test_code_dedup_and_order(self):
        c = Code.from_strings(["10", "01", "10"])
        assert len(c) == 2
        assert [w.to_string() for w in c.sorted_words()] == ["10", "01"]

    def test_code_mixed_lengths(self):
        with pytest.raises(LengthMismatch):
            Code.from_strings(["10", "100"])

    def test_multiset(self):
        w = BitVector.from_string("10")
        ms = CodeMultiset.of({w: 3})
        assert ms.total() == 3
        assert ms.support == Code.of([w])
        with pytest.raises(ValueError):
            CodeMultiset.of({w: 0})


class TestSensorMatrix:
    def test_columns_transpose(self):
        m = SensorMatrix.from_strings(["0111100", "0011000"], Geometry.LINE)
        assert m.k == 2 and m.n == 7
        cols = [c.to_string() for c in m.columns]
        assert cols == ["00", "10", "11", "11", "10", "00", "00"]
        again = SensorMatrix.from_columns(m.columns, Geometry.LINE)
        assert again.rows == m.rows

    def test_column_set_and_multiset(self):
        m = SensorMatrix.from_strings(["110", "011"], Geometry.LINE)
        assert m.column_set() == Code.from_strings(["10", "11", "01"])
        ms = SensorMatrix.from_strings(["11", "11"], Geometry.LINE).column_multiset()
        assert ms.entries == {BitVector.from_string("11"): 2}

    @given(
        st.lists(
            st.lists(st.integers(0, 1), min_size=3, max_size=3),
            min_size=0,
            max_size=5,
        )
    )
    def test_transpose_involution(self, rows):
        m = SensorMatrix(
            [BitVector.from_bits(r) for r in rows], Geometry.LINE
        )
        back = SensorMatrix.from_columns(m.columns, Geometry.LINE)
        assert back.rows == m.rows


class TestRegimeCheck:
    def test_adjacency_is_cyclic_only_on_circle(self):
        assert adjacent_column_pairs(4, Geometry.LINE) == [(0, 1), (1, 2), (2, 3)]
        assert adjacent_column_pairs(4, Geometry.CIRCLE) == [
            (0, 1), (1, 2), (2, 3), (3, 0)
        ]
        assert adjacent_column_pairs(1, Geometry.LINE) == []

    def test_signature_names(self):
        assert CO.name == "CO"
        assert HCO.name == "HCO"
        assert CCO.name == "CCO"
        assert HCCO.name == "HCCO"

    def test_hco_matrix(self):
        m = SensorMatrix.from_strings(
            ["0110000", "0011100", "0000100", "0000001"], Geometry.LINE
        )
        assert regime_check(m, CO)
        assert regime_check(m, HCO)
        assert regime_check(m, CCO)
        assert regime_check(m, HCCO)

    def test_co_but_not_hco(self):
        m = SensorMatrix.from_strings(
            ["011000", "001110", "000100", "100000"], Geometry.LINE
        )
        assert regime_check(m, CO)
        assert not regime_check(m, HCO)
        assert inharmonious_adjacent_pairs(m) == [(0, 1), (2, 3)]

    def test_cco_but_not_co(self):
        m = SensorMatrix.from_strings(["1001", "1100"], Geometry.CIRCLE)
        assert not regime_check(m, CO)
        assert regime_check(m, CCO)

    def test_regime_geometry_governs(self):
        # the matrix's own tag is ignored; only the regime's geometry counts
        m = SensorMatrix.from_strings(["1001"], Geometry.LINE)
        assert regime_check(m, CCO)
        assert not regime_check(m, CO)

    def test_hcco_ordering_from_circular_counterexample(self):
        m = SensorMatrix.from_columns(
            [BitVector.from_string(s) for s in ("1000", "1110", "0100", "1101")],
            Geometry.CIRCLE,
        )
        assert regime_check(m, HCCO)
