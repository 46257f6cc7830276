"""Rank/select over raw bits via a symmetric two-level count directory.

Geometry: 2048-bit superblocks carrying absolute 64-bit cumulative counts,
512-bit blocks carrying 16-bit counts relative to their superblock. Index
overhead is 64/2048 + 16/512 = 0.0625 bits per element. Select has no
directory of its own; it binary-searches the superblock counts globally.
"""

from __future__ import annotations

from bisect import bisect_right

from .bits import RawBitVector, select_in_word

SUPER_BITS = 2048
BLOCK_BITS = 512
BLOCKS_PER_SUPER = SUPER_BITS // BLOCK_BITS  # 4
WORDS_PER_BLOCK = BLOCK_BITS // 64  # 8

# Shift equivalents of the geometry, used in the query hot paths.
_S = 11  # log2(SUPER_BITS)
_B = 9  # log2(BLOCK_BITS)


class BlockBitVec:
    __slots__ = ("words", "len_bits", "total_ones", "super_ranks", "block_ranks")

    def __init__(self, raw: RawBitVector):
        words = raw.words
        n = raw.len_bits
        n_blocks = -(-n // BLOCK_BITS)
        n_super = -(-n // SUPER_BITS)
        super_ranks = [0] * n_super
        block_ranks = [0] * n_blocks
        cum = 0
        rel = 0
        n_words = len(words)
        for b in range(n_blocks):
            if b & 3 == 0:
                super_ranks[b >> 2] = cum
                rel = 0
            block_ranks[b] = rel
            c = 0
            for k in range(b << 3, min((b << 3) + 8, n_words)):
                c += words[k].bit_count()
            cum += c
            rel += c
        self.words = words
        self.len_bits = n
        self.total_ones = cum
        self.super_ranks = super_ranks
        self.block_ranks = block_ranks

    @property
    def total_zeros(self) -> int:
        return self.len_bits - self.total_ones

    def rank1(self, i: int) -> int:
        """Set bits in positions [0, i]. Scans at most 8 words past the directory."""
        if not 0 <= i < self.len_bits:
            raise IndexError(f"position {i} out of range for length {self.len_bits}")
        words = self.words
        r = self.super_ranks[i >> _S] + self.block_ranks[i >> _B]
        wi = i >> 6
        for k in range((i >> _B) << 3, wi):
            r += words[k].bit_count()
        return r + (words[wi] & ((1 << ((i & 63) + 1)) - 1)).bit_count()

    def rank0(self, i: int) -> int:
        return i + 1 - self.rank1(i)

    def select1(self, j: int) -> int:
        """Position of the (j+1)-th set bit (0-based rank)."""
        if not 0 <= j < self.total_ones:
            raise ValueError(f"select1 rank {j} out of range ({self.total_ones} set bits)")
        sr = self.super_ranks
        s = bisect_right(sr, j) - 1
        rem = j - sr[s]
        br = self.block_ranks
        b = s << 2
        last = min((s << 2) + 4, len(br)) - 1
        while b < last and br[b + 1] <= rem:
            b += 1
        rem -= br[b]
        words = self.words
        for k in range(b << 3, min((b << 3) + 8, len(words))):
            c = words[k].bit_count()
            if rem < c:
                return (k << 6) + select_in_word(words[k], rem)
            rem -= c
        raise RuntimeError("rank directory inconsistent with words")

    def select0(self, j: int) -> int:
        """Position of the (j+1)-th zero bit (0-based rank)."""
        n = self.len_bits
        if not 0 <= j < n - self.total_ones:
            raise ValueError(f"select0 rank {j} out of range ({n - self.total_ones} zero bits)")
        sr = self.super_ranks
        lo, hi = 0, len(sr) - 1
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if (mid << _S) - sr[mid] <= j:
                lo = mid
            else:
                hi = mid - 1
        s = lo
        rem = j - ((s << _S) - sr[s])
        br = self.block_ranks
        b = s << 2
        last = min((s << 2) + 4, len(br)) - 1
        while b < last and ((b + 1 - (s << 2)) << _B) - br[b + 1] <= rem:
            b += 1
        rem -= ((b - (s << 2)) << _B) - br[b]
        words = self.words
        for k in range(b << 3, min((b << 3) + 8, len(words))):
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
        """Index size in bits per element; raw bits count as exactly 1.0."""
        n = self.len_bits
        if n == 0:
            raise ValueError("space report undefined for an empty vector")
        rank_bits = 64 * len(self.super_ranks) + 16 * len(self.block_ranks)
        total = 1.0 + rank_bits / n
        return {
            "raw": 1.0,
            "rank_index": rank_bits / n,
            "select_index": 0.0,
            "total": total,
            "total_all": total,
        }


def _scan_ranks(words: list[int], n: int, start: int, count: int):
    if not 0 <= start < n:
        raise IndexError(f"scan start {start} out of range for length {n}")
    i = start
    wi = i >> 6
    w = words[wi] >> (i & 63)
    while True:
        count += w & 1
        yield count
        i += 1
        if i == n:
            return
        w >>= 1
        if i & 63 == 0:
            wi += 1
            w = words[wi]
