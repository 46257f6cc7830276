"""Compressed vector: build invariants, navigation, decompression, space."""

import pytest

from succinctbits import GeneratorSpec, OracleBitVec, RawBitVector, RRRBitVec, generate


def stream_bits_from_classes(rrr):
    """Recompute the offset stream length from the class array alone."""
    width = rrr.tables.width
    total = 0
    for blk in range(rrr.n_blocks):
        c = (rrr.classes[blk >> 1] >> ((blk & 1) << 2)) & 0xF
        total += width[c]
    return total


class TestBuild:
    def test_all_zeros_240(self):
        r = RRRBitVec(RawBitVector.zeros(240))
        assert r.offset_bits == 0
        assert r.cum_ranks == [0]
        assert r.bit_ptrs == [0]
        assert r.rank0(239) == 240

    def test_all_ones_240(self):
        r = RRRBitVec(RawBitVector.ones(240))
        assert r.offset_bits == 0  # extreme classes cost no offset bits
        assert r.total_ones == 240
        assert r.rank1(239) == 240

    def test_partial_final_block_class_counts_real_bits(self):
        # 17 bits: second block holds 2 real bits, zero-padded to 15
        r = RRRBitVec(RawBitVector.ones(17))
        assert r.n_blocks == 2
        assert (r.classes[0] & 0xF) == 15
        assert (r.classes[0] >> 4) == 2
        assert r.total_ones == 17

    def test_stream_length_matches_class_widths(self):
        r = RRRBitVec(generate(GeneratorSpec(3, 0.37, 33_331)))
        assert r.offset_bits == stream_bits_from_classes(r)

    def test_superblock_pointers_are_width_prefix_sums(self):
        r = RRRBitVec(generate(GeneratorSpec(4, 0.5, 10_000)))
        width = r.tables.width
        ptr = 0
        expected = []
        for blk in range(r.n_blocks):
            if blk % 16 == 0:
                expected.append(ptr)
            c = (r.classes[blk >> 1] >> ((blk & 1) << 2)) & 0xF
            ptr += width[c]
        assert r.bit_ptrs == expected

    def test_samples_hold_superblock_indices(self):
        raw = generate(GeneratorSpec(5, 0.5, 100_000))
        r = RRRBitVec(raw)
        o = OracleBitVec(raw)
        for k, sb in enumerate(r.select1_samples):
            assert sb == o.select1(256 * k) // 240
        for k, sb in enumerate(r.select0_samples):
            assert sb == o.select0(256 * k) // 240


class TestRank:
    def test_single_bit_straddles_superblock_boundary(self):
        n = 241
        words = [0] * 4
        words[239 >> 6] = 1 << (239 & 63)
        r = RRRBitVec(RawBitVector(words, n))
        assert r.rank1(238) == 0
        assert r.rank1(239) == 1
        assert r.rank1(240) == 1
        assert r.select1(0) == 239

    def test_out_of_range(self):
        r = RRRBitVec(RawBitVector.ones(100))
        with pytest.raises(IndexError):
            r.rank1(100)
        with pytest.raises(IndexError):
            r.rank1(-1)

    def test_against_oracle_random(self):
        raw = generate(GeneratorSpec(7, 0.5, 250_000))
        r = RRRBitVec(raw)
        o = OracleBitVec(raw)
        for i in list(range(0, 250_000, 991)) + [0, 14, 15, 239, 240, 241, 3599, 3600, 249_999]:
            assert r.rank1(i) == o.rank1(i)
            assert r.rank0(i) == o.rank0(i)

    def test_scan_matches_absolute(self):
        raw = generate(GeneratorSpec(13, 0.4, 2_000))
        r = RRRBitVec(raw)
        for i, got in zip(range(37, 2_000), r.rank1_scan(37)):
            assert got == r.rank1(i)


class TestSelect:
    def test_all_ones_sample_point(self):
        r = RRRBitVec(RawBitVector.ones(512))
        assert r.select1(256) == 256
        assert r.select1(0) == 0
        assert r.select1(511) == 511

    def test_all_zeros(self):
        r = RRRBitVec(RawBitVector.zeros(4095))
        assert r.select0(4094) == 4094
        assert r.select0(0) == 0

    def test_select0_with_partial_final_block(self):
        # zeros only exist in the padded final block's valid region
        raw = RawBitVector.from_bits([1] * 250 + [0, 1, 0])
        r = RRRBitVec(raw)
        assert r.select0(0) == 250
        assert r.select0(1) == 252
        with pytest.raises(ValueError):
            r.select0(2)

    def test_empty_domain(self):
        with pytest.raises(ValueError):
            RRRBitVec(RawBitVector.zeros(64)).select1(0)
        with pytest.raises(ValueError):
            RRRBitVec(RawBitVector.ones(64)).select0(0)

    def test_against_oracle_random(self):
        raw = generate(GeneratorSpec(19, 0.1, 100_000))
        r = RRRBitVec(raw)
        o = OracleBitVec(raw)
        for j in range(0, o.total_ones, 67):
            assert r.select1(j) == o.select1(j)
        for j in range(0, o.total_zeros, 601):
            assert r.select0(j) == o.select0(j)


class TestDecompression:
    @pytest.mark.parametrize("n,density", [(15, 0.5), (16, 0.5), (239, 0.2), (240, 0.8), (241, 0.5), (37_007, 0.5)])
    def test_roundtrip(self, n, density):
        raw = generate(GeneratorSpec(n, density, n))
        assert RRRBitVec(raw).to_raw() == raw

    def test_empty(self):
        raw = RawBitVector([], 0)
        assert RRRBitVec(raw).to_raw() == raw


class TestSpace:
    def test_structural_is_density_independent(self):
        reports = [
            RRRBitVec(generate(GeneratorSpec(1, d, 100_000))).space_report()
            for d in (0.01, 0.5, 0.99)
        ]
        assert len({rep["structural"] for rep in reports}) == 1
        # 4 bits per 15 plus 128 per 240, up to ceil rounding
        assert reports[0]["structural"] == pytest.approx(4 / 15 + 128 / 240, abs=0.001)

    def test_components_sum(self):
        rep = RRRBitVec(generate(GeneratorSpec(2, 0.5, 50_000))).space_report()
        assert rep["total"] == pytest.approx(
            rep["offsets"] + rep["structural"] + rep["select1_samples"]
        )
        assert rep["total_all"] == pytest.approx(rep["total"] + rep["select0_samples"])
        assert rep["select_samples"] == pytest.approx(
            rep["select1_samples"] + rep["select0_samples"]
        )

    def test_empty_undefined(self):
        with pytest.raises(ValueError):
            RRRBitVec(RawBitVector([], 0)).space_report()
