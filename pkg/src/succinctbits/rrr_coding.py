"""Class/offset coding for 15-bit blocks, plus its binomial space model.

A block value x in [0, 2**15) is coded as (class, offset): the class is
popcount(x), the offset is x's 0-based position among the C(15, class) values
of that class listed in ascending integer order (equivalently, ascending as
LSB-first bit patterns). A class-c offset is stored in
width(c) = ceil(log2(C(15, c))) bits, which is 0 for the two extreme classes
and peaks at 13 bits for classes 7 and 8.
"""

from __future__ import annotations

import math
from array import array

BLOCK_BITS = 15
NUM_CLASSES = BLOCK_BITS + 1

# Geometry of the compressed vector built on this coding; kept here so the
# analytic helpers below need no circular import.
BLOCKS_PER_SUPER = 16
SUPER_BITS = BLOCK_BITS * BLOCKS_PER_SUPER  # 240
SELECT_SAMPLE_RATE = 256


class RRRTables:
    """Shared lookup tables: encode (per 15-bit value) and decode (per class).

    class_table has 2**15 one-byte entries, offset_table 2**15 two-byte
    entries; decode_table row c holds exactly C(15, c) two-byte entries in
    offset order. Tables are immutable; one process-wide instance is enough.
    """

    __slots__ = ("binom", "width", "class_table", "offset_table", "decode_table")

    def __init__(self) -> None:
        binom = [[0] * NUM_CLASSES for _ in range(NUM_CLASSES)]
        for n in range(NUM_CLASSES):
            binom[n][0] = 1
            for k in range(1, n + 1):
                binom[n][k] = binom[n - 1][k - 1] + (binom[n - 1][k] if k < n else 0)
        self.binom = binom
        self.width = [(binom[BLOCK_BITS][c] - 1).bit_length() for c in range(NUM_CLASSES)]
        class_table = bytearray(1 << BLOCK_BITS)
        offset_table = array("H", bytes(2 << BLOCK_BITS))
        decode_table = [array("H") for _ in range(NUM_CLASSES)]
        counters = [0] * NUM_CLASSES
        for x in range(1 << BLOCK_BITS):
            c = x.bit_count()
            class_table[x] = c
            offset_table[x] = counters[c]
            counters[c] += 1
            decode_table[c].append(x)
        self.class_table = bytes(class_table)
        self.offset_table = offset_table
        self.decode_table = decode_table


_DEFAULT: RRRTables | None = None


def default_tables() -> RRRTables:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = RRRTables()
    return _DEFAULT


def encode_block(value: int, tables: RRRTables | None = None) -> tuple[int, int]:
    """(class, offset) for a 15-bit block value."""
    if not 0 <= value < 1 << BLOCK_BITS:
        raise ValueError(f"block value {value} out of range")
    t = tables or default_tables()
    return t.class_table[value], t.offset_table[value]


def decode_block(cls: int, offset: int, tables: RRRTables | None = None) -> int:
    """Block value for (class, offset); inverse of :func:`encode_block`."""
    t = tables or default_tables()
    if not 0 <= cls < NUM_CLASSES:
        raise ValueError(f"class {cls} out of range")
    row = t.decode_table[cls]
    if not 0 <= offset < len(row):
        raise ValueError(f"offset {offset} out of range for class {cls} ({len(row)} values)")
    return row[offset]


def class_probability(p: float, cls: int) -> float:
    """P(popcount of a 15-bit Bernoulli(p) block == cls)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"density must be in [0, 1], got {p}")
    if not 0 <= cls < NUM_CLASSES:
        raise ValueError(f"class {cls} out of range")
    return math.comb(BLOCK_BITS, cls) * p**cls * (1.0 - p) ** (BLOCK_BITS - cls)


def expected_offset_bits(p: float) -> float:
    """Expected offset-stream bits per block at density p (symmetric in p vs 1-p)."""
    width = default_tables().width
    return sum(class_probability(p, c) * width[c] for c in range(NUM_CLASSES))


def expected_candidate_superblocks(density: float) -> float:
    """Expected superblocks spanned by one select sample window at a density.

    Consecutive samples are 256 set bits apart, which covers about 256/density
    positions, i.e. 256 / (240 * density) superblocks. Undefined at density 0.
    """
    if not 0.0 < density <= 1.0:
        raise ValueError(f"density must be in (0, 1], got {density}")
    return SELECT_SAMPLE_RATE / (SUPER_BITS * density)
