"""Rank/select tuned for query latency: wide superblocks, narrow blocks,
sampled select.

Geometry: 4096-bit superblocks (64-bit absolute counts) over 256-bit blocks
(16-bit relative counts), 64/4096 + 16/256 = 0.078125 bits per element of
rank overhead, at most 4 word popcounts per rank. Select keeps the bit
position of every 256th set (and zero) bit as a 32-bit sample; a query binary
searches superblock counts only inside the window between two samples, then
scans at most 16 block entries. Positions are 32-bit, so vectors must stay
under 2**32 bits.
"""

from __future__ import annotations

from bisect import bisect_right

from .bits import RawBitVector, select_in_word
from .block import _scan_ranks

SUPER_BITS = 4096
BLOCK_BITS = 256
BLOCKS_PER_SUPER = SUPER_BITS // BLOCK_BITS  # 16
WORDS_PER_BLOCK = BLOCK_BITS // 64  # 4
SELECT_SAMPLE_RATE = 256

_S = 12  # log2(SUPER_BITS)
_B = 8  # log2(BLOCK_BITS)


class FastBitVec:
    __slots__ = (
        "words",
        "len_bits",
        "total_ones",
        "super_ranks",
        "block_ranks",
        "select1_samples",
        "select0_samples",
    )

    def __init__(self, raw: RawBitVector):
        n = raw.len_bits
        if n >= 1 << 32:
            raise ValueError("FastBitVec select samples are 32-bit positions; vector too long")
        words = raw.words
        n_blocks = -(-n // BLOCK_BITS)
        n_super = -(-n // SUPER_BITS)
        super_ranks = [0] * n_super
        block_ranks = [0] * n_blocks
        s1: list[int] = []
        s0: list[int] = []
        cum = 0
        rel = 0
        next1 = 0
        next0 = 0
        # One pass builds the rank directories and both sample arrays.
        for k in range(len(words)):
            if k & 63 == 0:
                super_ranks[k >> 6] = cum
                rel = 0
            if k & 3 == 0:
                block_ranks[k >> 2] = rel
            w = words[k]
            c = w.bit_count()
            base = k << 6
            if next1 < cum + c:
                while next1 < cum + c:
                    s1.append(base + select_in_word(w, next1 - cum))
                    next1 += SELECT_SAMPLE_RATE
            valid = n - base
            if valid > 64:
                valid = 64
            zc = valid - c
            zbase = base - cum  # zeros before this word
            if next0 < zbase + zc:
                inv = ~w & ((1 << valid) - 1)
                while next0 < zbase + zc:
                    s0.append(base + select_in_word(inv, next0 - zbase))
                    next0 += SELECT_SAMPLE_RATE
            cum += c
            rel += c
        self.words = words
        self.len_bits = n
        self.total_ones = cum
        self.super_ranks = super_ranks
        self.block_ranks = block_ranks
        self.select1_samples = s1
        self.select0_samples = s0

    @property
    def total_zeros(self) -> int:
        return self.len_bits - self.total_ones

    def rank1(self, i: int) -> int:
        """Set bits in positions [0, i]. Scans at most 4 words past the directory."""
        if not 0 <= i < self.len_bits:
            raise IndexError(f"position {i} out of range for length {self.len_bits}")
        words = self.words
        r = self.super_ranks[i >> _S] + self.block_ranks[i >> _B]
        wi = i >> 6
        for k in range((i >> _B) << 2, wi):
            r += words[k].bit_count()
        return r + (words[wi] & ((1 << ((i & 63) + 1)) - 1)).bit_count()

    def rank0(self, i: int) -> int:
        return i + 1 - self.rank1(i)

    def select1(self, j: int) -> int:
        if not 0 <= j < self.total_ones:
            raise ValueError(f"select1 rank {j} out of range ({self.total_ones} set bits)")
        samples = self.select1_samples
        k = j >> 8
        lo_pos = samples[k]
        hi_pos = samples[k + 1] if k + 1 < len(samples) else self.len_bits - 1
        sr = self.super_ranks
        s = bisect_right(sr, j, lo_pos >> _S, (hi_pos >> _S) + 1) - 1
        rem = j - sr[s]
        br = self.block_ranks
        b = s << 4
        last = min((s << 4) + 16, len(br)) - 1
        while b < last and br[b + 1] <= rem:
            b += 1
        rem -= br[b]
        words = self.words
        for k in range(b << 2, min((b << 2) + 4, len(words))):
            c = words[k].bit_count()
            if rem < c:
                return (k << 6) + select_in_word(words[k], rem)
            rem -= c
        raise RuntimeError("rank directory inconsistent with words")

    def select0(self, j: int) -> int:
        n = self.len_bits
        if not 0 <= j < n - self.total_ones:
            raise ValueError(f"select0 rank {j} out of range ({n - self.total_ones} zero bits)")
        samples = self.select0_samples
        k = j >> 8
        lo_pos = samples[k]
        hi_pos = samples[k + 1] if k + 1 < len(samples) else n - 1
        sr = self.super_ranks
        lo, hi = lo_pos >> _S, hi_pos >> _S
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if (mid << _S) - sr[mid] <= j:
                lo = mid
            else:
                hi = mid - 1
        s = lo
        rem = j - ((s << _S) - sr[s])
        br = self.block_ranks
        b = s << 4
        last = min((s << 4) + 16, len(br)) - 1
        while b < last and ((b + 1 - (s << 4)) << _B) - br[b + 1] <= rem:
            b += 1
        rem -= ((b - (s << 4)) << _B) - br[b]
        words = self.words
        for k in range(b << 2, min((b << 2) + 4, len(words))):
            base = k << 6
            valid = n - base
            if valid > 64:
                valid = 64
            zc = valid - words[k].bit_count()
            if rem < zc:
                return base + select_in_word(~words[k] & ((1 << valid) - 1), rem)
            rem -= zc
        raise RuntimeError("rank directory inconsistent with words")

    def rank1_scan(self, start: int = 0):
        """Yield rank1(i) for consecutive i from ``start`` without re-resolving the directory."""
        return _scan_ranks(self.words, self.len_bits, start, self.rank1(start - 1) if start else 0)

    def space_report(self) -> dict[str, float]:
        """Index size in bits per element; `total` counts the set-bit sample
        directory only, `total_all` adds the zero-bit one."""
        n = self.len_bits
        if n == 0:
            raise ValueError("space report undefined for an empty vector")
        rank_bits = 64 * len(self.super_ranks) + 16 * len(self.block_ranks)
        s1_bits = 32 * len(self.select1_samples)
        s0_bits = 32 * len(self.select0_samples)
        return {
            "raw": 1.0,
            "rank_index": rank_bits / n,
            "select1_samples": s1_bits / n,
            "select0_samples": s0_bits / n,
            "total": 1.0 + (rank_bits + s1_bits) / n,
            "total_all": 1.0 + (rank_bits + s1_bits + s0_bits) / n,
        }
