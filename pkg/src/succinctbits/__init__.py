"""Succinct rank/select bit vectors.

Three interchangeable structures over the same LSB-first word layout:

- BlockBitVec: symmetric two-level rank directory, binary-search select.
- FastBitVec: asymmetric directory with 32-bit select samples.
- RRRBitVec: class/offset-compressed blocks with sampled select.

Plus a naive oracle for differential testing, a fuzz harness, and a
benchmark harness (see the `fuzz` and `bench` console scripts).
"""

from .bits import (
    FORMAT_VERSION,
    MAGIC,
    GeneratorSpec,
    RawBitVector,
    deserialize,
    generate,
    popcount_word,
    select_in_word,
    serialize,
    splitmix64,
)
from .block import BlockBitVec
from .fast import FastBitVec
from .oracle import OracleBitVec
from .rrr import RRRBitVec
from .rrr_coding import (
    RRRTables,
    class_probability,
    decode_block,
    default_tables,
    encode_block,
    expected_candidate_superblocks,
    expected_offset_bits,
)

__all__ = [
    "FORMAT_VERSION",
    "MAGIC",
    "GeneratorSpec",
    "RawBitVector",
    "deserialize",
    "generate",
    "popcount_word",
    "select_in_word",
    "serialize",
    "splitmix64",
    "BlockBitVec",
    "FastBitVec",
    "OracleBitVec",
    "RRRBitVec",
    "RRRTables",
    "class_probability",
    "decode_block",
    "default_tables",
    "encode_block",
    "expected_candidate_superblocks",
    "expected_offset_bits",
]
