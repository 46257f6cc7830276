"""Benchmark harness: amortized query latency, construction time, space.

Methodology for latency rows: query positions are generated before any timing
starts, each configuration is warmed for at least 500 ms, and at least five
repetitions run up to 100,000 iterations each on a monotonic clock. Every
timed loop folds its results into a checksum that is verified against an
untimed rerun, so a misbehaving structure cannot silently benchmark garbage.
Latency numbers are reported, never asserted; space numbers are exact.
"""

from __future__ import annotations

import csv
import statistics
import time
import zlib
from dataclasses import dataclass
from itertools import islice

import numpy as np

from .bits import GeneratorSpec, RawBitVector, generate
from .block import BlockBitVec
from .fast import FastBitVec
from .rrr import RRRBitVec
from .rrr_coding import default_tables

DEFAULT_SEED = 42
DEFAULT_SIZES = (100_000, 1_000_000)
DEFAULT_DENSITIES = (0.01, 0.10, 0.50, 0.90, 0.99)

MAX_ITERS = 100_000
MIN_REPS = 5
WARMUP_SECONDS = 0.5

STRUCTURES = ("BlockBitVec", "FastBitVec", "RRRBitVec")
PATTERNS = ("uniform", "sequential", "iterator")
SUITES = ("rank-size", "rank-density", "select", "select-density", "construct", "space")

CSV_COLUMNS = [
    "structure",
    "op",
    "n",
    "density",
    "pattern",
    "mean_ns",
    "stddev_ns",
    "reps",
    "raw_bpe",
    "rank_index_bpe",
    "select_index_bpe",
    "offsets_bpe",
    "structural_bpe",
    "total_bpe",
]


@dataclass
class BenchRecord:
    structure: str
    op: str
    n: int
    density: float
    pattern: str = ""
    mean_ns: float | None = None
    stddev_ns: float | None = None
    reps: int | None = None
    raw_bpe: float | None = None
    rank_index_bpe: float | None = None
    select_index_bpe: float | None = None
    offsets_bpe: float | None = None
    structural_bpe: float | None = None
    total_bpe: float | None = None

    def to_row(self) -> list[str]:
        row = []
        for col in CSV_COLUMNS:
            v = getattr(self, col)
            if v is None:
                row.append("")
            elif isinstance(v, float):
                row.append(f"{v:.6g}")
            else:
                row.append(str(v))
        return row


def write_csv(records: list[BenchRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow(r.to_row())


def _apply_space(record: BenchRecord, structure: str, sv) -> None:
    rep = sv.space_report()
    if structure == "RRRBitVec":
        record.offsets_bpe = rep["offsets"]
        record.structural_bpe = rep["structural"]
        record.select_index_bpe = rep["select1_samples"]
    else:
        record.raw_bpe = rep["raw"]
        record.rank_index_bpe = rep["rank_index"]
        record.select_index_bpe = rep.get("select1_samples", rep.get("select_index", 0.0))
    record.total_bpe = rep["total"]


class _Workspace:
    """Caches generated vectors and built structures across one bench run."""

    def __init__(self, seed: int):
        self.seed = seed
        self.tables = default_tables()
        self._raws: dict[tuple[int, float], RawBitVector] = {}
        self._built: dict[tuple[str, int, float], object] = {}

    def raw(self, n: int, density: float) -> RawBitVector:
        key = (n, density)
        if key not in self._raws:
            self._raws[key] = generate(GeneratorSpec(self.seed, density, n))
        return self._raws[key]

    def build(self, structure: str, n: int, density: float):
        key = (structure, n, density)
        if key not in self._built:
            self._built[key] = self._construct(structure, self.raw(n, density))
        return self._built[key]

    def _construct(self, structure: str, raw: RawBitVector):
        if structure == "BlockBitVec":
            return BlockBitVec(raw)
        if structure == "FastBitVec":
            return FastBitVec(raw)
        if structure == "RRRBitVec":
            return RRRBitVec(raw, self.tables)
        raise ValueError(f"unknown structure {structure!r}")


def _positions(seed: int, count: int, bound: int, pattern: str) -> list[int]:
    """Pregenerated query positions; no RNG calls happen inside timed loops."""
    if bound <= 0:
        raise ValueError("query domain is empty")
    gamma = np.uint64(0x9E3779B97F4A7C15)
    idx = np.arange(1, count + 1, dtype=np.uint64)
    z = np.uint64(seed & (2**64 - 1)) + idx * gamma
    z ^= z >> np.uint64(30)
    z *= np.uint64(0xBF58476D1CE4E5B9)
    z ^= z >> np.uint64(27)
    z *= np.uint64(0x94D049BB133111EB)
    z ^= z >> np.uint64(31)
    if pattern == "uniform":
        return [int(v) for v in z % np.uint64(bound)]
    if pattern == "sequential":
        start = int(z[0] % np.uint64(bound))
        return [(start + k) % bound for k in range(count)]
    raise ValueError(f"unknown pattern {pattern!r}")


def _calibrate_iters(fn, positions, target_s: float) -> int:
    probe = min(512, len(positions))
    t0 = time.perf_counter_ns()
    for p in positions[:probe]:
        fn(p)
    per_call = max(1.0, (time.perf_counter_ns() - t0) / probe)
    want = int(target_s * 1e9 / per_call)
    return max(1024, min(MAX_ITERS, want))


def _timed_reps(run_once, reps: int):
    """run_once() -> (elapsed_ns, iters, checksum); returns means + verified checksum."""
    means = []
    checksum = None
    for _ in range(reps):
        elapsed, iters, s = run_once()
        means.append(elapsed / iters)
        if checksum is None:
            checksum = s
        elif s != checksum:
            raise RuntimeError("checksum varied across repetitions")
    return means, checksum


def run_latency(
    ws: _Workspace,
    structure: str,
    op: str,
    n: int,
    density: float,
    pattern: str = "uniform",
    reps: int = MIN_REPS,
    warmup_s: float = WARMUP_SECONDS,
    target_rep_s: float = 0.15,
) -> BenchRecord:
    """Amortized ns/query for one (structure, op, n, density, pattern) cell."""
    if n <= 0:
        raise ValueError("n must be positive")
    if reps < MIN_REPS:
        raise ValueError(f"at least {MIN_REPS} repetitions required")
    if op not in ("rank1", "select1", "select0"):
        raise ValueError(f"unknown op {op!r}")
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}")
    if pattern == "iterator" and op != "rank1":
        raise ValueError("iterator pattern applies to rank1 only")
    sv = ws.build(structure, n, density)

    if pattern == "iterator":
        iters = min(MAX_ITERS, n)

        def run_once():
            gen = sv.rank1_scan(0)
            s = 0
            t0 = time.perf_counter_ns()
            for r in islice(gen, iters):
                s += r
            t1 = time.perf_counter_ns()
            return t1 - t0, iters, s

        deadline = time.perf_counter() + warmup_s
        while time.perf_counter() < deadline:
            run_once()
        means, checksum = _timed_reps(run_once, reps)
        verify = 0
        for r in islice(sv.rank1_scan(0), iters):
            verify += r
    else:
        if op == "rank1":
            fn, bound = sv.rank1, n
        elif op == "select1":
            fn, bound = sv.select1, sv.total_ones
        else:
            fn, bound = sv.select0, sv.total_zeros
        if bound <= 0:
            raise ValueError(f"{op} domain is empty for n={n} density={density}")
        label = f"{structure}/{op}/{n}/{density!r}/{pattern}"
        qseed = (ws.seed << 32) ^ zlib.crc32(label.encode())
        warm = _positions(qseed, 2048, bound, "uniform")
        deadline = time.perf_counter() + warmup_s
        while time.perf_counter() < deadline:
            for p in warm:
                fn(p)
        iters = _calibrate_iters(fn, warm, target_rep_s)
        positions = _positions(qseed, iters, bound, pattern)

        def run_once():
            s = 0
            t0 = time.perf_counter_ns()
            for p in positions:
                s += fn(p)
            t1 = time.perf_counter_ns()
            return t1 - t0, iters, s

        means, checksum = _timed_reps(run_once, reps)
        verify = sum(fn(p) for p in positions)
    if verify != checksum:
        raise RuntimeError("timed checksum does not match untimed rerun")

    record = BenchRecord(
        structure=structure,
        op=op,
        n=n,
        density=density,
        pattern=pattern,
        mean_ns=statistics.fmean(means),
        stddev_ns=statistics.stdev(means) if len(means) > 1 else 0.0,
        reps=reps,
    )
    _apply_space(record, structure, sv)
    return record


def run_construction(
    ws: _Workspace,
    structure: str,
    n: int,
    density: float,
    reps: int = MIN_REPS,
) -> BenchRecord:
    """Wall time to build one structure from an already-generated vector."""
    if n <= 0:
        raise ValueError("n must be positive")
    raw = ws.raw(n, density)
    ws._construct(structure, raw)  # warmup build

    def run_once():
        t0 = time.perf_counter_ns()
        sv = ws._construct(structure, raw)
        t1 = time.perf_counter_ns()
        return t1 - t0, 1, sv.total_ones

    means, checksum = _timed_reps(run_once, reps)
    if ws._construct(structure, raw).total_ones != checksum:
        raise RuntimeError("construction checksum does not match rerun")
    record = BenchRecord(
        structure=structure,
        op="build",
        n=n,
        density=density,
        mean_ns=statistics.fmean(means),
        stddev_ns=statistics.stdev(means) if len(means) > 1 else 0.0,
        reps=reps,
    )
    _apply_space(record, structure, ws.build(structure, n, density))
    return record


def run_space_sweep(ws: _Workspace, n: int = 1_000_000, densities=DEFAULT_DENSITIES) -> list[BenchRecord]:
    """Space-only rows for every structure across the density sweep."""
    if n <= 0:
        raise ValueError("n must be positive")
    records = []
    for density in densities:
        for structure in STRUCTURES:
            record = BenchRecord(structure=structure, op="space", n=n, density=density)
            _apply_space(record, structure, ws.build(structure, n, density))
            records.append(record)
    return records


def run_suite(
    suite: str,
    sizes=DEFAULT_SIZES,
    densities=DEFAULT_DENSITIES,
    seed: int = DEFAULT_SEED,
    ws: _Workspace | None = None,
    progress=None,
    **latency_kwargs,
) -> list[BenchRecord]:
    ws = ws or _Workspace(seed)
    records: list[BenchRecord] = []

    def emit(rec):
        records.append(rec)
        if progress is not None:
            progress(rec)

    if suite == "rank-size":
        for n in sizes:
            for structure in STRUCTURES:
                for pattern in PATTERNS:
                    emit(run_latency(ws, structure, "rank1", n, 0.5, pattern, **latency_kwargs))
    elif suite == "rank-density":
        for n in sizes:
            for density in densities:
                for structure in STRUCTURES:
                    emit(run_latency(ws, structure, "rank1", n, density, "uniform", **latency_kwargs))
    elif suite == "select":
        for n in sizes:
            for structure in STRUCTURES:
                for op in ("select1", "select0"):
                    emit(run_latency(ws, structure, op, n, 0.5, "uniform", **latency_kwargs))
    elif suite == "select-density":
        for n in sizes:
            for density in densities:
                for structure in STRUCTURES:
                    emit(run_latency(ws, structure, "select1", n, density, "uniform", **latency_kwargs))
    elif suite == "construct":
        for n in sizes:
            for structure in STRUCTURES:
                emit(run_construction(ws, structure, n, 0.5))
    elif suite == "space":
        for n in sizes:
            for rec in run_space_sweep(ws, n, densities):
                emit(rec)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return records


def run_all(
    sizes=DEFAULT_SIZES,
    densities=DEFAULT_DENSITIES,
    seed: int = DEFAULT_SEED,
    progress=None,
    **latency_kwargs,
) -> list[BenchRecord]:
    ws = _Workspace(seed)
    records = []
    for suite in SUITES:
        records.extend(
            run_suite(suite, sizes, densities, seed, ws=ws, progress=progress, **latency_kwargs)
        )
    return records
