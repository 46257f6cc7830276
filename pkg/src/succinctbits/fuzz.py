"""Differential correctness harness.

Every suite builds the three indexed structures over the same raw vector and
compares their answers against the naive oracle (or, for the single-bit walk,
against closed-form expectations). Suites count each executed comparison and
record any mismatch with enough context to replay it from the seed.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .bits import GeneratorSpec, RawBitVector, generate, splitmix64
from .block import BlockBitVec
from .fast import FastBitVec
from .oracle import OracleBitVec
from .rrr import RRRBitVec
from .rrr_coding import RRRTables, default_tables

DEFAULT_SEED = 42

BOUNDARY_BASES = (15, 240, 256, 512, 2048, 4096)
BOUNDARY_DENSITIES = (0.01, 0.05, 0.10, 0.25, 0.50, 0.75, 0.90, 0.95, 0.99)
SPECIAL_DENSITIES = (0.0, 1.0, 0.0001, 0.9999, 0.5)
BOUNDARY_SIZES = (15, 16, 17, 239, 240, 241, 4095, 4096, 4097)
SPECIAL_PRIMES = (13, 31, 127, 251, 509, 1021, 2039, 4093, 4099, 8191)
SPECIAL_SIZES = tuple(sorted(set(BOUNDARY_SIZES) | set(SPECIAL_PRIMES)))

SUITE_NAMES = ("exhaustive", "boundary", "sizes", "walk")


@dataclass
class FuzzFailure:
    suite: str
    seed: int
    spec: str
    query: str
    expected: object
    got: object


@dataclass
class FuzzReport:
    suite: str
    vectors: int = 0
    assertions: int = 0
    failures: list[FuzzFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "vectors": self.vectors,
            "assertions": self.assertions,
            "failures": [asdict(f) for f in self.failures],
        }


_MAX_FAILURES = 100  # stop recording (not checking) past this many


def _build_all(raw: RawBitVector, tables: RRRTables):
    return (
        ("BlockBitVec", BlockBitVec(raw)),
        ("FastBitVec", FastBitVec(raw)),
        ("RRRBitVec", RRRBitVec(raw, tables)),
    )


def _fail(report: FuzzReport, seed: int, spec: str, query: str, expected, got) -> None:
    if len(report.failures) < _MAX_FAILURES:
        report.failures.append(FuzzFailure(report.suite, seed, spec, query, expected, got))


def _check_ranks(report, seed, spec, structs, oracle, positions) -> None:
    orank1 = oracle.rank1
    pairs = [(name, sv.rank1, sv.rank0) for name, sv in structs]
    n_checked = 0
    for i in positions:
        e1 = orank1(i)
        e0 = i + 1 - e1
        for name, r1, r0 in pairs:
            if r1(i) != e1:
                _fail(report, seed, spec, f"{name}.rank1({i})", e1, r1(i))
            if r0(i) != e0:
                _fail(report, seed, spec, f"{name}.rank0({i})", e0, r0(i))
        n_checked += 1
    report.assertions += 2 * len(pairs) * n_checked


def _check_selects(report, seed, spec, structs, oracle, ranks1, ranks0) -> None:
    osel1 = oracle.select1
    osel0 = oracle.select0
    sel1 = [(name, sv.select1) for name, sv in structs]
    sel0 = [(name, sv.select0) for name, sv in structs]
    for j in ranks1:
        e = osel1(j)
        for name, fn in sel1:
            if fn(j) != e:
                _fail(report, seed, spec, f"{name}.select1({j})", e, fn(j))
    for j in ranks0:
        e = osel0(j)
        for name, fn in sel0:
            if fn(j) != e:
                _fail(report, seed, spec, f"{name}.select0({j})", e, fn(j))
    report.assertions += len(structs) * (len(ranks1) + len(ranks0))


def _check_empty_select_raises(report, seed, spec, structs, op: str) -> None:
    """Empty select domains must raise, not crash or return garbage."""
    for name, sv in structs:
        fn = sv.select1 if op == "select1" else sv.select0
        try:
            got = fn(0)
        except ValueError:
            got = "raised"
        if got != "raised":
            _fail(report, seed, spec, f"{name}.{op}(0) on empty domain", "raised", got)
        report.assertions += 1


def exhaustive_scan(lengths=(15, 16), tables: RRRTables | None = None) -> FuzzReport:
    """Every bit pattern of the given lengths, every position, every rank, vs oracle."""
    t = tables or default_tables()
    report = FuzzReport("exhaustive")
    for length in lengths:
        for x in range(1 << length):
            raw = RawBitVector.from_int(x, length)
            oracle = OracleBitVec(raw)
            structs = _build_all(raw, t)
            _check_ranks(report, x, f"n={length} value={x:#x}", structs, oracle, range(length))
            ones = oracle.total_ones
            _check_selects(
                report, x, f"n={length} value={x:#x}", structs, oracle,
                range(ones), range(length - ones),
            )
            rrr = structs[2][1]
            if rrr.to_raw() != raw:
                _fail(report, x, f"n={length} value={x:#x}", "RRRBitVec.to_raw()", x, None)
            report.assertions += 1
            report.vectors += 1
    return report


def _boundary_positions(n: int, bases=BOUNDARY_BASES) -> list[int]:
    pos = set()
    for base in bases:
        for m in range(0, n + base, base):
            for p in (m - 2, m - 1, m, m + 1, m + 2):
                if 0 <= p < n:
                    pos.add(p)
    pos.add(0)
    pos.add(n - 1)
    return sorted(pos)


def _rand_positions(seed: int, count: int, bound: int, salt: int) -> list[int]:
    if bound <= 0 or count <= 0:
        return []
    return [splitmix64(seed, salt + k) % bound for k in range(count)]


def boundary_fuzz(
    max_bits: int = 250_000,
    densities=BOUNDARY_DENSITIES,
    vectors_per_cell: int = 3,
    seed: int = DEFAULT_SEED,
    random_queries: int = 4096,
    tables: RRRTables | None = None,
) -> FuzzReport:
    """Random vectors per (size, density) cell; queries hammer the directory
    boundaries (multiples of every block/superblock/sample granularity, +-2)
    plus uniform random positions."""
    t = tables or default_tables()
    report = FuzzReport("boundary")
    for di, density in enumerate(densities):
        for vi in range(vectors_per_cell):
            vseed = splitmix64(seed, di * 1024 + vi)
            n = max_bits if vi % 2 == 0 else max_bits // 2 + (vseed % (max_bits // 4))
            spec = GeneratorSpec(vseed, density, n)
            raw = generate(spec)
            desc = f"seed={vseed} density={density} n={n}"
            oracle = OracleBitVec(raw)
            structs = _build_all(raw, t)
            positions = _boundary_positions(n)
            positions += _rand_positions(vseed, random_queries, n, salt=1 << 40)
            _check_ranks(report, vseed, desc, structs, oracle, positions)
            ones = oracle.total_ones
            zeros = n - ones
            js1 = [j for j in _boundary_positions(ones, bases=(256,)) if j < ones] if ones else []
            js1 += _rand_positions(vseed, random_queries // 2, ones, salt=2 << 40)
            js0 = [j for j in _boundary_positions(zeros, bases=(256,)) if j < zeros] if zeros else []
            js0 += _rand_positions(vseed, random_queries // 2, zeros, salt=3 << 40)
            _check_selects(report, vseed, desc, structs, oracle, js1, js0)
            report.vectors += 1
    return report


def special_sizes(
    sizes=SPECIAL_SIZES,
    densities=SPECIAL_DENSITIES,
    seed: int = DEFAULT_SEED,
    tables: RRRTables | None = None,
) -> FuzzReport:
    """Block-boundary and prime lengths at extreme densities, checked at every
    position and every valid select rank."""
    t = tables or default_tables()
    report = FuzzReport("sizes")
    for si, n in enumerate(sizes):
        for di, density in enumerate(densities):
            vseed = splitmix64(seed, si * 64 + di + (1 << 20))
            raw = generate(GeneratorSpec(vseed, density, n))
            desc = f"seed={vseed} density={density} n={n}"
            oracle = OracleBitVec(raw)
            structs = _build_all(raw, t)
            _check_ranks(report, vseed, desc, structs, oracle, range(n))
            ones = oracle.total_ones
            _check_selects(report, vseed, desc, structs, oracle, range(ones), range(n - ones))
            if ones == 0:
                _check_empty_select_raises(report, vseed, desc, structs, "select1")
            if ones == n:
                _check_empty_select_raises(report, vseed, desc, structs, "select0")
            report.vectors += 1
    return report


def single_bit_walk(sizes=BOUNDARY_SIZES, tables: RRRTables | None = None) -> FuzzReport:
    """One set bit walked across every position of each boundary size.

    Expectations are closed-form: select1(0) = p, rank1 steps from 0 to 1 at
    p, and the j-th zero sits at j for j < p and j + 1 past it.
    """
    t = tables or default_tables()
    report = FuzzReport("walk")
    for n in sizes:
        n_words = (n + 63) >> 6
        for p in range(n):
            words = [0] * n_words
            words[p >> 6] = 1 << (p & 63)
            raw = RawBitVector(words, n)
            desc = f"n={n} p={p}"
            structs = _build_all(raw, t)
            checks = []
            for name, sv in structs:
                checks.append((f"{name}.select1(0)", sv.select1(0), p))
                checks.append((f"{name}.rank1({p})", sv.rank1(p), 1))
                checks.append((f"{name}.rank1({n - 1})", sv.rank1(n - 1), 1))
                if p > 0:
                    checks.append((f"{name}.rank1({p - 1})", sv.rank1(p - 1), 0))
                zeros = n - 1
                for j in {0, p - 1, p, zeros - 1}:
                    if 0 <= j < zeros:
                        expected = j if j < p else j + 1
                        checks.append((f"{name}.select0({j})", sv.select0(j), expected))
            for query, got, expected in checks:
                if got != expected:
                    _fail(report, p, desc, query, expected, got)
            report.assertions += len(checks)
            report.vectors += 1
    return report


def run_suites(
    suites=SUITE_NAMES,
    seed: int = DEFAULT_SEED,
    scale: float = 1.0,
    tables: RRRTables | None = None,
    progress=None,
) -> list[FuzzReport]:
    """Run the named suites; ``scale`` multiplies the randomized assertion volume."""
    if scale <= 0:
        raise ValueError("scale must be positive")
    t = tables or default_tables()
    reports = []
    for name in suites:
        if name == "exhaustive":
            rep = exhaustive_scan(tables=t)
        elif name == "boundary":
            rep = boundary_fuzz(
                vectors_per_cell=max(1, round(3 * scale)),
                random_queries=max(256, round(4096 * scale)),
                seed=seed,
                tables=t,
            )
        elif name == "sizes":
            rep = special_sizes(seed=seed, tables=t)
        elif name == "walk":
            rep = single_bit_walk(tables=t)
        else:
            raise ValueError(f"unknown suite {name!r}")
        reports.append(rep)
        if progress is not None:
            progress(rep)
    return reports
