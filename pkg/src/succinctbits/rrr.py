"""Entropy-compressed rank/select vector over class/offset-coded 15-bit blocks.

Classes are packed 4 bits each, two per byte. Offsets live in one contiguous
LSB-first bitstream at their class-dependent widths; nothing marks block
boundaries, so navigation always goes through the class array. Superblocks
cover 16 blocks (240 bits) and store an absolute 64-bit rank plus the 64-bit
bit offset of their first block's offset-stream position. Rank walks at most
15 intermediate classes, advancing the stream pointer by table widths, and
decodes exactly one block. Select keeps the superblock index of every 256th
set (and zero) bit as a 32-bit sample to bound its binary search.
"""

from __future__ import annotations

from bisect import bisect_right

from .bits import RawBitVector, WORD_MASK, select_in_word
from .rrr_coding import (
    BLOCK_BITS,
    BLOCKS_PER_SUPER,
    RRRTables,
    SELECT_SAMPLE_RATE,
    SUPER_BITS,
    default_tables,
)

_FULL_BLOCK = (1 << BLOCK_BITS) - 1


class RRRBitVec:
    __slots__ = (
        "len_bits",
        "total_ones",
        "n_blocks",
        "classes",
        "offsets",
        "offset_bits",
        "cum_ranks",
        "bit_ptrs",
        "select1_samples",
        "select0_samples",
        "tables",
    )

    def __init__(self, raw: RawBitVector, tables: RRRTables | None = None):
        t = tables or default_tables()
        n = raw.len_bits
        words = raw.words
        n_words = len(words)
        n_blocks = -(-n // BLOCK_BITS)
        n_super = -(-n_blocks // BLOCKS_PER_SUPER)
        if n_super >= 1 << 32:
            raise ValueError("RRRBitVec select samples are 32-bit superblock indices; vector too long")
        class_table = t.class_table
        offset_table = t.offset_table
        width = t.width
        classes = bytearray((n_blocks + 1) >> 1)
        # 13 bits per block is the widest offset; 3 spare bytes let reads at
        # the stream tail always pull 3 bytes.
        offsets = bytearray(((13 * n_blocks) >> 3) + 3)
        cum_ranks = [0] * n_super
        bit_ptrs = [0] * n_super
        s1: list[int] = []
        s0: list[int] = []
        cum = 0
        cumz = 0
        ptr = 0
        next1 = 0
        next0 = 0
        for blk in range(n_blocks):
            if blk & 15 == 0:
                cum_ranks[blk >> 4] = cum
                bit_ptrs[blk >> 4] = ptr
            bitpos = blk * BLOCK_BITS
            wi = bitpos >> 6
            sh = bitpos & 63
            v = words[wi] >> sh
            if sh > 49 and wi + 1 < n_words:
                v |= words[wi + 1] << (64 - sh)
            v &= _FULL_BLOCK
            c = class_table[v]
            classes[blk >> 1] |= c << ((blk & 1) << 2)
            w = width[c]
            if w:
                val = offset_table[v] << (ptr & 7)
                byte = ptr >> 3
                offsets[byte] |= val & 0xFF
                offsets[byte + 1] |= (val >> 8) & 0xFF
                offsets[byte + 2] |= (val >> 16) & 0xFF
                ptr += w
            if next1 < cum + c:
                sb = blk >> 4
                while next1 < cum + c:
                    s1.append(sb)
                    next1 += SELECT_SAMPLE_RATE
            valid = n - bitpos
            if valid > BLOCK_BITS:
                valid = BLOCK_BITS
            zc = valid - c
            if next0 < cumz + zc:
                sb = blk >> 4
                while next0 < cumz + zc:
                    s0.append(sb)
                    next0 += SELECT_SAMPLE_RATE
            cum += c
            cumz += zc
        self.len_bits = n
        self.total_ones = cum
        self.n_blocks = n_blocks
        self.classes = bytes(classes)
        self.offsets = bytes(offsets[: (ptr >> 3) + 3])
        self.offset_bits = ptr
        self.cum_ranks = cum_ranks
        self.bit_ptrs = bit_ptrs
        self.select1_samples = s1
        self.select0_samples = s0
        self.tables = t

    @property
    def total_zeros(self) -> int:
        return self.len_bits - self.total_ones

    def _decode_at(self, cls: int, ptr: int) -> int:
        """Block value for the class whose offset starts at stream bit ptr."""
        w = self.tables.width[cls]
        if w == 0:
            return _FULL_BLOCK if cls else 0
        buf = self.offsets
        byte = ptr >> 3
        chunk = buf[byte] | (buf[byte + 1] << 8) | (buf[byte + 2] << 16)
        return self.tables.decode_table[cls][(chunk >> (ptr & 7)) & ((1 << w) - 1)]

    def rank1(self, i: int) -> int:
        """Set bits in [0, i]: walk classes from the superblock start, decode one block."""
        if not 0 <= i < self.len_bits:
            raise IndexError(f"position {i} out of range for length {self.len_bits}")
        blk = i // BLOCK_BITS
        s = blk >> 4
        r = self.cum_ranks[s]
        ptr = self.bit_ptrs[s]
        classes = self.classes
        width = self.tables.width
        for k in range(s << 4, blk):
            c = (classes[k >> 1] >> ((k & 1) << 2)) & 0xF
            r += c
            ptr += width[c]
        c = (classes[blk >> 1] >> ((blk & 1) << 2)) & 0xF
        v = self._decode_at(c, ptr)
        return r + (v & ((1 << (i - blk * BLOCK_BITS + 1)) - 1)).bit_count()

    def rank0(self, i: int) -> int:
        return i + 1 - self.rank1(i)

    def select1(self, j: int) -> int:
        if not 0 <= j < self.total_ones:
            raise ValueError(f"select1 rank {j} out of range ({self.total_ones} set bits)")
        samples = self.select1_samples
        k = j >> 8
        lo = samples[k]
        hi = samples[k + 1] if k + 1 < len(samples) else len(self.cum_ranks) - 1
        cr = self.cum_ranks
        s = bisect_right(cr, j, lo, hi + 1) - 1
        rem = j - cr[s]
        ptr = self.bit_ptrs[s]
        classes = self.classes
        width = self.tables.width
        for blk in range(s << 4, min((s << 4) + 16, self.n_blocks)):
            c = (classes[blk >> 1] >> ((blk & 1) << 2)) & 0xF
            if rem < c:
                return blk * BLOCK_BITS + select_in_word(self._decode_at(c, ptr), rem)
            rem -= c
            ptr += width[c]
        raise RuntimeError("superblock ranks inconsistent with classes")

    def select0(self, j: int) -> int:
        n = self.len_bits
        if not 0 <= j < n - self.total_ones:
            raise ValueError(f"select0 rank {j} out of range ({n - self.total_ones} zero bits)")
        samples = self.select0_samples
        k = j >> 8
        lo = samples[k]
        hi = samples[k + 1] if k + 1 < len(samples) else len(self.cum_ranks) - 1
        cr = self.cum_ranks
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if mid * SUPER_BITS - cr[mid] <= j:
                lo = mid
            else:
                hi = mid - 1
        s = lo
        rem = j - (s * SUPER_BITS - cr[s])
        ptr = self.bit_ptrs[s]
        classes = self.classes
        width = self.tables.width
        for blk in range(s << 4, min((s << 4) + 16, self.n_blocks)):
            c = (classes[blk >> 1] >> ((blk & 1) << 2)) & 0xF
            valid = n - blk * BLOCK_BITS
            if valid > BLOCK_BITS:
                valid = BLOCK_BITS
            if rem < valid - c:
                v = self._decode_at(c, ptr)
                return blk * BLOCK_BITS + select_in_word(~v & ((1 << valid) - 1), rem)
            rem -= valid - c
            ptr += width[c]
        raise RuntimeError("superblock ranks inconsistent with classes")

    def rank1_scan(self, start: int = 0):
        """Yield rank1(i) for consecutive i from ``start``, decoding each block once."""
        n = self.len_bits
        if not 0 <= start < n:
            raise IndexError(f"scan start {start} out of range for length {n}")
        count = self.rank1(start - 1) if start else 0
        classes = self.classes
        width = self.tables.width
        blk = start // BLOCK_BITS
        s = blk >> 4
        ptr = self.bit_ptrs[s]
        for k in range(s << 4, blk):
            ptr += width[(classes[k >> 1] >> ((k & 1) << 2)) & 0xF]
        i = start
        while i < n:
            c = (classes[blk >> 1] >> ((blk & 1) << 2)) & 0xF
            v = self._decode_at(c, ptr) >> (i - blk * BLOCK_BITS)
            ptr += width[c]
            hi = blk * BLOCK_BITS + BLOCK_BITS
            if hi > n:
                hi = n
            while i < hi:
                count += v & 1
                yield count
                v >>= 1
                i += 1
            blk += 1

    def to_raw(self) -> RawBitVector:
        """Decode every block back into an uncompressed vector."""
        n = self.len_bits
        words = [0] * ((n + 63) >> 6)
        classes = self.classes
        width = self.tables.width
        ptr = 0
        for blk in range(self.n_blocks):
            c = (classes[blk >> 1] >> ((blk & 1) << 2)) & 0xF
            v = self._decode_at(c, ptr)
            ptr += width[c]
            if v:
                bitpos = blk * BLOCK_BITS
                wi = bitpos >> 6
                sh = bitpos & 63
                words[wi] |= (v << sh) & WORD_MASK
                if sh > 49 and wi + 1 < len(words):
                    words[wi + 1] |= v >> (64 - sh)
        return RawBitVector(words, n)

    def space_report(self) -> dict[str, float]:
        """Measured bits per element; `total` counts the set-bit sample
        directory only, `total_all` adds the zero-bit one."""
        n = self.len_bits
        if n == 0:
            raise ValueError("space report undefined for an empty vector")
        structural = 4 * self.n_blocks + 128 * len(self.cum_ranks)
        s1_bits = 32 * len(self.select1_samples)
        s0_bits = 32 * len(self.select0_samples)
        return {
            "offsets": self.offset_bits / n,
            "structural": structural / n,
            "select1_samples": s1_bits / n,
            "select0_samples": s0_bits / n,
            "select_samples": (s1_bits + s0_bits) / n,
            "total": (self.offset_bits + structural + s1_bits) / n,
            "total_all": (self.offset_bits + structural + s1_bits + s0_bits) / n,
        }
