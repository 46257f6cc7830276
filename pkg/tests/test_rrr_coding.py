"""Class/offset coding tables and the binomial space model."""

import math

import pytest

from succinctbits import (
    class_probability,
    decode_block,
    encode_block,
    expected_candidate_superblocks,
    expected_offset_bits,
)
from succinctbits.rrr_coding import BLOCK_BITS, NUM_CLASSES


def test_binom_matches_math_comb(tables):
    for n in range(NUM_CLASSES):
        for k in range(NUM_CLASSES):
            assert tables.binom[n][k] == (math.comb(n, k) if k <= n else 0)


def test_widths():
    # ceil(log2(C(15, c))) per class, computed independently then frozen
    expected = []
    for c in range(NUM_CLASSES):
        m = math.comb(BLOCK_BITS, c)
        w = 0
        while (1 << w) < m:
            w += 1
        expected.append(w)
    assert expected == [0, 4, 7, 9, 11, 12, 13, 13, 13, 13, 12, 11, 9, 7, 4, 0]
    from succinctbits import default_tables

    assert default_tables().width == expected
    assert max(expected) == 13  # C(15,7) = 6435 needs 13 bits


def test_table_shapes(tables):
    assert len(tables.class_table) == 1 << 15
    assert len(tables.offset_table) == 1 << 15
    assert [len(row) for row in tables.decode_table] == [
        math.comb(15, c) for c in range(NUM_CLASSES)
    ]
    assert len(tables.decode_table[7]) == 6435


def test_encode_examples(tables):
    # single-bit values: ascending order makes the offset the bit position
    for k in range(15):
        assert encode_block(1 << k) == (1, k)
    assert encode_block(0b1000) == (1, 3)
    assert decode_block(1, 3) == 0b1000
    assert encode_block(0) == (0, 0)
    assert tables.class_table[0x7FFF] == 15
    assert tables.offset_table[0x7FFF] == 0
    assert decode_block(15, 0) == 0x7FFF


def test_offsets_are_ascending_per_class(tables):
    # within one class, larger values get larger offsets
    prev = {}
    for x in range(1 << 15):
        c = tables.class_table[x]
        o = tables.offset_table[x]
        if c in prev:
            assert o == prev[c] + 1
        else:
            assert o == 0
        prev[c] = o


def test_domain_errors():
    with pytest.raises(ValueError):
        encode_block(-1)
    with pytest.raises(ValueError):
        encode_block(1 << 15)
    with pytest.raises(ValueError):
        decode_block(16, 0)
    with pytest.raises(ValueError):
        decode_block(1, 15)
    with pytest.raises(ValueError):
        decode_block(0, 1)


class TestProbabilityModel:
    def test_distribution_normalizes(self):
        for p in (0.0, 0.01, 0.3, 0.5, 0.77, 1.0):
            assert abs(sum(class_probability(p, c) for c in range(NUM_CLASSES)) - 1.0) <= 1e-12

    def test_known_points(self):
        assert class_probability(0.5, 0) == pytest.approx(2.0**-15)
        assert class_probability(0.0, 0) == 1.0
        assert class_probability(1.0, 15) == 1.0
        assert class_probability(0.5, 7) == pytest.approx(6435 * 2.0**-15)

    def test_domain(self):
        with pytest.raises(ValueError):
            class_probability(-0.1, 0)
        with pytest.raises(ValueError):
            class_probability(0.5, 16)


class TestExpectedOffsetBits:
    def test_half(self):
        assert abs(expected_offset_bits(0.5) - 12.49) <= 0.02

    def test_sparse(self):
        assert abs(expected_offset_bits(0.01) - 0.59) <= 0.02

    def test_symmetry(self):
        for p in (0.01, 0.1, 0.25, 0.33, 0.49):
            assert abs(expected_offset_bits(p) - expected_offset_bits(1.0 - p)) <= 1e-12

    def test_extremes_are_free(self):
        assert expected_offset_bits(0.0) == 0.0
        assert expected_offset_bits(1.0) == 0.0


class TestCandidateSuperblocks:
    def test_values(self):
        assert abs(expected_candidate_superblocks(0.01) - 106.7) <= 0.1
        assert abs(expected_candidate_superblocks(0.99) - 1.077) <= 0.01
        assert expected_candidate_superblocks(1.0) == pytest.approx(256 / 240)

    def test_domain(self):
        with pytest.raises(ValueError):
            expected_candidate_superblocks(0.0)
        with pytest.raises(ValueError):
            expected_candidate_superblocks(-0.5)
        with pytest.raises(ValueError):
            expected_candidate_superblocks(1.5)
