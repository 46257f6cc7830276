"""Reference rank/select used as ground truth by the differential fuzzer.

Answers come from a single bit-by-bit pass over the raw words. No popcount,
masking, or directory logic is shared with the indexed structures, so a bug
in those code paths cannot reproduce itself here. The pass is cached per
vector; repeated queries are table lookups over its output.
"""

from __future__ import annotations

from .bits import RawBitVector


class OracleBitVec:
    __slots__ = ("raw", "len_bits", "_prefix", "_ones", "_zeros")

    def __init__(self, raw: RawBitVector):
        self.raw = raw
        self.len_bits = raw.len_bits
        self._prefix: list[int] | None = None
        self._ones: list[int] | None = None
        self._zeros: list[int] | None = None

    def _scan(self) -> None:
        words = self.raw.words
        n = self.len_bits
        prefix = [0] * n
        ones: list[int] = []
        zeros: list[int] = []
        count = 0
        for i in range(n):
            if (words[i >> 6] >> (i & 63)) & 1:
                count += 1
                ones.append(i)
            else:
                zeros.append(i)
            prefix[i] = count
        self._prefix = prefix
        self._ones = ones
        self._zeros = zeros

    @property
    def total_ones(self) -> int:
        if self._ones is None:
            self._scan()
        return len(self._ones)

    @property
    def total_zeros(self) -> int:
        return self.len_bits - self.total_ones

    def rank1(self, i: int) -> int:
        if not 0 <= i < self.len_bits:
            raise IndexError(f"position {i} out of range for length {self.len_bits}")
        if self._prefix is None:
            self._scan()
        return self._prefix[i]

    def rank0(self, i: int) -> int:
        return i + 1 - self.rank1(i)

    def select1(self, j: int) -> int:
        if self._ones is None:
            self._scan()
        if not 0 <= j < len(self._ones):
            raise ValueError(f"select1 rank {j} out of range ({len(self._ones)} set bits)")
        return self._ones[j]

    def select0(self, j: int) -> int:
        if self._zeros is None:
            self._scan()
        if not 0 <= j < len(self._zeros):
            raise ValueError(f"select0 rank {j} out of range ({len(self._zeros)} zero bits)")
        return self._zeros[j]
