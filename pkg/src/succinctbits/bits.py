"""Raw bit vectors: word storage, bit primitives, generation, serialization.

Layout convention, used by every structure in this package: bit i of a vector
lives in words[i // 64] at in-word offset i % 64 (LSB-first). Padding bits at
positions >= len_bits in the final word are always zero, so whole-word
popcounts never need masking.

Serialized streams are little-endian: 4-byte magic "SBV1", u32 format version
(currently 1), u64 length in bits, then ceil(len_bits / 64) raw words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

WORD_BITS = 64
WORD_MASK = (1 << 64) - 1

MAGIC = b"SBV1"
FORMAT_VERSION = 1

_HEADER_BYTES = 16  # magic + version + len_bits

# SplitMix64 constants. The generator runs in counter mode: the draw for bit i
# is a pure function of (seed, i), which makes chunked vectorized generation
# and scalar replay produce identical streams.
_SM64_GAMMA = 0x9E3779B97F4A7C15
_SM64_MIX1 = 0xBF58476D1CE4E5B9
_SM64_MIX2 = 0x94D049BB133111EB


def popcount_word(w: int) -> int:
    """Number of set bits in a 64-bit word."""
    return w.bit_count()


def select_in_word(w: int, k: int) -> int:
    """Position of the (k+1)-th set bit of ``w``, counting from the LSB.

    ``k`` is 0-based and must be smaller than popcount(w).
    """
    if k < 0 or k >= w.bit_count():
        raise ValueError(f"select_in_word: rank {k} out of range for word with {w.bit_count()} set bits")
    for _ in range(k):
        w &= w - 1
    return (w & -w).bit_length() - 1


class RawBitVector:
    """Uncompressed bit array over 64-bit words, immutable by convention."""

    __slots__ = ("words", "len_bits")

    def __init__(self, words: Iterable[int], len_bits: int):
        words = list(words)
        if len_bits < 0:
            raise ValueError("len_bits must be non-negative")
        n_words = (len_bits + 63) >> 6
        if len(words) != n_words:
            raise ValueError(f"expected {n_words} words for {len_bits} bits, got {len(words)}")
        tail = len_bits & 63
        if tail and words and (words[-1] >> tail):
            raise ValueError("padding bits beyond len_bits must be zero")
        self.words = words
        self.len_bits = len_bits

    @classmethod
    def zeros(cls, n: int) -> "RawBitVector":
        return cls([0] * ((n + 63) >> 6), n)

    @classmethod
    def ones(cls, n: int) -> "RawBitVector":
        n_words = (n + 63) >> 6
        words = [WORD_MASK] * n_words
        tail = n & 63
        if tail and n_words:
            words[-1] = (1 << tail) - 1
        return cls(words, n)

    @classmethod
    def from_int(cls, value: int, len_bits: int) -> "RawBitVector":
        """Build from an integer whose bit k becomes vector bit k."""
        if value < 0 or value >> len_bits:
            raise ValueError("value does not fit in len_bits")
        n_words = (len_bits + 63) >> 6
        words = [(value >> (k << 6)) & WORD_MASK for k in range(n_words)]
        return cls(words, len_bits)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "RawBitVector":
        words = [0]
        n = 0
        for b in bits:
            if n and n & 63 == 0:
                words.append(0)
            if b:
                words[-1] |= 1 << (n & 63)
            n += 1
        if n == 0:
            return cls([], 0)
        return cls(words, n)

    def get_bit(self, i: int) -> bool:
        if not 0 <= i < self.len_bits:
            raise IndexError(f"bit index {i} out of range for length {self.len_bits}")
        return (self.words[i >> 6] >> (i & 63)) & 1 == 1

    def count_ones(self) -> int:
        return sum(w.bit_count() for w in self.words)

    def bits(self) -> Iterator[int]:
        words = self.words
        for i in range(self.len_bits):
            yield (words[i >> 6] >> (i & 63)) & 1

    def __len__(self) -> int:
        return self.len_bits

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RawBitVector):
            return NotImplemented
        return self.len_bits == other.len_bits and self.words == other.words

    def __repr__(self) -> str:
        return f"RawBitVector(len_bits={self.len_bits})"


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic recipe for a random vector: seed, target density, length."""

    seed: int
    density: float
    len_bits: int


def splitmix64(seed: int, counter: int) -> int:
    """Scalar SplitMix64 draw for (seed, counter); reference for the vectorized path."""
    z = (seed + (counter + 1) * _SM64_GAMMA) & WORD_MASK
    z ^= z >> 30
    z = (z * _SM64_MIX1) & WORD_MASK
    z ^= z >> 27
    z = (z * _SM64_MIX2) & WORD_MASK
    z ^= z >> 31
    return z


_GEN_CHUNK_BITS = 1 << 22


def generate(spec: GeneratorSpec) -> RawBitVector:
    """Materialize the Bernoulli vector described by ``spec``.

    Bit i is set iff its SplitMix64 draw falls below density * 2**64, so the
    output is a pure function of (seed, density, len_bits).
    """
    n = spec.len_bits
    if n < 0:
        raise ValueError("len_bits must be non-negative")
    if not 0.0 <= spec.density <= 1.0:
        raise ValueError(f"density must be in [0, 1], got {spec.density}")
    if not 0 <= spec.seed <= WORD_MASK:
        raise ValueError("seed must fit in 64 bits")
    if n == 0:
        return RawBitVector([], 0)
    threshold = int(round(spec.density * 2.0**64))
    if threshold <= 0:
        return RawBitVector.zeros(n)
    if threshold >= 1 << 64:
        return RawBitVector.ones(n)

    seed64 = np.uint64(spec.seed)
    gamma = np.uint64(_SM64_GAMMA)
    mix1 = np.uint64(_SM64_MIX1)
    mix2 = np.uint64(_SM64_MIX2)
    thresh64 = np.uint64(threshold)
    words: list[int] = []
    for start in range(0, n, _GEN_CHUNK_BITS):
        m = min(_GEN_CHUNK_BITS, n - start)
        z = np.arange(start + 1, start + m + 1, dtype=np.uint64)
        z = seed64 + z * gamma
        z ^= z >> np.uint64(30)
        z *= mix1
        z ^= z >> np.uint64(27)
        z *= mix2
        z ^= z >> np.uint64(31)
        packed = np.packbits(z < thresh64, bitorder="little")
        if packed.nbytes & 7:
            packed = np.concatenate([packed, np.zeros(8 - (packed.nbytes & 7), dtype=np.uint8)])
        words.extend(int(w) for w in packed.view("<u8"))
    return RawBitVector(words, n)


def serialize(v: RawBitVector) -> bytes:
    """Encode ``v`` as magic, version, bit length, and raw words (all little-endian)."""
    header = MAGIC + FORMAT_VERSION.to_bytes(4, "little") + v.len_bits.to_bytes(8, "little")
    return header + np.asarray(v.words, dtype="<u8").tobytes()


def deserialize(data: bytes) -> RawBitVector:
    """Decode a stream produced by :func:`serialize`, validating the framing."""
    if len(data) < _HEADER_BYTES:
        raise ValueError("truncated stream: missing header")
    if data[:4] != MAGIC:
        raise ValueError(f"bad magic {data[:4]!r}, expected {MAGIC!r}")
    version = int.from_bytes(data[4:8], "little")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {version}")
    len_bits = int.from_bytes(data[8:16], "little")
    n_words = (len_bits + 63) >> 6
    expected = _HEADER_BYTES + 8 * n_words
    if len(data) < expected:
        raise ValueError(f"truncated stream: expected {expected} bytes, got {len(data)}")
    if len(data) > expected:
        raise ValueError(f"trailing bytes after {expected}-byte stream")
    words = [int(w) for w in np.frombuffer(data, dtype="<u8", offset=_HEADER_BYTES)]
    return RawBitVector(words, len_bits)
