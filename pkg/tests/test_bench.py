"""Bench harness mechanics: schema, determinism, guard rails.

Latency values themselves are never asserted here, only that the machinery
produces well-formed rows and catches its own failure modes.
"""

import csv

import pytest

from succinctbits import bench
from succinctbits.cli import bench_main

FAST = dict(warmup_s=0.02, target_rep_s=0.005)


def read_rows(path):
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        assert reader.fieldnames == bench.CSV_COLUMNS
        return list(reader)


def test_positions_deterministic_and_in_range():
    a = bench._positions(99, 1000, 777, "uniform")
    b = bench._positions(99, 1000, 777, "uniform")
    assert a == b
    assert all(0 <= p < 777 for p in a)
    assert len(set(a)) > 500  # not degenerate

    seq = bench._positions(99, 1000, 777, "sequential")
    assert all(seq[k + 1] == (seq[k] + 1) % 777 for k in range(999))

    with pytest.raises(ValueError):
        bench._positions(99, 10, 0, "uniform")
    with pytest.raises(ValueError):
        bench._positions(99, 10, 5, "zigzag")


def test_space_sweep_schema(tmp_path):
    ws = bench._Workspace(seed=5)
    records = bench.run_space_sweep(ws, n=50_000, densities=(0.1, 0.5))
    assert len(records) == 6
    out = tmp_path / "space.csv"
    bench.write_csv(records, out)
    rows = read_rows(out)
    for row in rows:
        assert row["op"] == "space"
        assert row["mean_ns"] == row["stddev_ns"] == row["reps"] == ""
        assert float(row["total_bpe"]) > 0
        if row["structure"] == "RRRBitVec":
            assert row["raw_bpe"] == "" and row["rank_index_bpe"] == ""
            assert float(row["offsets_bpe"]) > 0 and float(row["structural_bpe"]) > 0
        else:
            assert row["offsets_bpe"] == "" and row["structural_bpe"] == ""
            assert float(row["raw_bpe"]) == 1.0


def test_space_sweep_deterministic():
    rows_a = [r.to_row() for r in bench.run_space_sweep(bench._Workspace(5), n=50_000, densities=(0.5,))]
    rows_b = [r.to_row() for r in bench.run_space_sweep(bench._Workspace(5), n=50_000, densities=(0.5,))]
    assert rows_a == rows_b


@pytest.mark.parametrize("structure", bench.STRUCTURES)
def test_latency_smoke(structure):
    ws = bench._Workspace(seed=5)
    rec = bench.run_latency(ws, structure, "rank1", 50_000, 0.5, "uniform", **FAST)
    assert rec.mean_ns > 0 and rec.stddev_ns >= 0 and rec.reps == bench.MIN_REPS
    assert rec.total_bpe > 1.0
    sel = bench.run_latency(ws, structure, "select0", 50_000, 0.5, "sequential", **FAST)
    assert sel.mean_ns > 0


def test_latency_iterator_pattern():
    ws = bench._Workspace(seed=5)
    rec = bench.run_latency(ws, "RRRBitVec", "rank1", 50_000, 0.5, "iterator", **FAST)
    assert rec.pattern == "iterator"
    assert rec.mean_ns > 0


def test_latency_usage_errors():
    ws = bench._Workspace(seed=5)
    with pytest.raises(ValueError):
        bench.run_latency(ws, "BlockBitVec", "rank1", 0, 0.5)
    with pytest.raises(ValueError):
        bench.run_latency(ws, "BlockBitVec", "rank1", 1000, 0.5, reps=4)
    with pytest.raises(ValueError):
        bench.run_latency(ws, "BlockBitVec", "rank2", 1000, 0.5)
    with pytest.raises(ValueError):
        bench.run_latency(ws, "BlockBitVec", "rank1", 1000, 0.5, "zigzag")
    with pytest.raises(ValueError):
        bench.run_latency(ws, "BlockBitVec", "select1", 1000, 0.5, "iterator")
    with pytest.raises(ValueError):
        bench.run_latency(ws, "BlockBitVec", "select1", 1000, 0.0, **FAST)
    with pytest.raises(ValueError):
        ws.build("HashMap", 1000, 0.5)


class _Flaky:
    """Returns a different answer every call; the checksum guard must notice."""

    def __init__(self, n):
        self.len_bits = n
        self.total_ones = n
        self.total_zeros = 0
        self._calls = 0

    def rank1(self, i):
        self._calls += 1
        return self._calls

    def space_report(self):
        return {"raw": 1.0, "rank_index": 0.0, "select1_samples": 0.0, "total": 1.0}


def test_checksum_guard_catches_unstable_structure():
    ws = bench._Workspace(seed=5)
    ws._built[("BlockBitVec", 4096, 0.5)] = _Flaky(4096)
    with pytest.raises(RuntimeError):
        bench.run_latency(ws, "BlockBitVec", "rank1", 4096, 0.5, warmup_s=0.0, target_rep_s=0.001)


def test_run_construction_smoke():
    ws = bench._Workspace(seed=5)
    rec = bench.run_construction(ws, "FastBitVec", 50_000, 0.5)
    assert rec.op == "build" and rec.pattern == ""
    assert rec.mean_ns > 0 and rec.reps == bench.MIN_REPS
    assert rec.raw_bpe == 1.0


def test_run_suite_rejects_unknown():
    with pytest.raises(ValueError):
        bench.run_suite("warp", sizes=(1000,))


def test_cli_space_suite(tmp_path):
    out = tmp_path / "bench.csv"
    code = bench_main(["--suite", "space", "--sizes", "50000", "--densities", "0.5", "--out", str(out)])
    assert code == 0
    rows = read_rows(out)
    assert [r["structure"] for r in rows] == list(bench.STRUCTURES)
    assert all(r["n"] == "50000" for r in rows)


def test_cli_rejects_bad_arguments(tmp_path):
    with pytest.raises(SystemExit) as exc:
        bench_main(["--suite", "space", "--sizes", "0", "--out", str(tmp_path / "x.csv")])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        bench_main(["--suite", "warp"])
