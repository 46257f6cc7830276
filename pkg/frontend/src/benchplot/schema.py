"""Reader for the bench CSV contract.

The column list is duplicated here on purpose: this package consumes the CSV
interface, not the library that produced it.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

EXPECTED_COLUMNS = (
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
)


class SchemaError(ValueError):
    """The CSV does not conform to the bench schema."""


class NoDataError(ValueError):
    """The CSV parsed fine but holds no rows for the requested figure."""


@dataclass(frozen=True)
class BenchRow:
    structure: str
    op: str
    n: int
    density: float
    pattern: str
    mean_ns: float | None
    stddev_ns: float | None
    reps: int | None
    raw_bpe: float | None
    rank_index_bpe: float | None
    select_index_bpe: float | None
    offsets_bpe: float | None
    structural_bpe: float | None
    total_bpe: float | None


def _opt(text: str, cast):
    return cast(text) if text != "" else None


def read_rows(path) -> list[BenchRow]:
    """Parse a bench CSV, raising SchemaError on any contract violation."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames
        if header is None:
            raise SchemaError("file is empty, expected a bench CSV header")
        missing = [c for c in EXPECTED_COLUMNS if c not in header]
        extra = [c for c in header if c not in EXPECTED_COLUMNS]
        if missing or extra:
            parts = []
            if missing:
                parts.append(f"missing columns: {', '.join(missing)}")
            if extra:
                parts.append(f"unknown columns: {', '.join(extra)}")
            raise SchemaError("; ".join(parts))
        rows = []
        for lineno, rec in enumerate(reader, start=2):
            if None in rec or None in rec.values():
                raise SchemaError(f"line {lineno}: wrong number of fields")
            try:
                rows.append(
                    BenchRow(
                        structure=rec["structure"],
                        op=rec["op"],
                        n=int(rec["n"]),
                        density=float(rec["density"]),
                        pattern=rec["pattern"],
                        mean_ns=_opt(rec["mean_ns"], float),
                        stddev_ns=_opt(rec["stddev_ns"], float),
                        reps=_opt(rec["reps"], int),
                        raw_bpe=_opt(rec["raw_bpe"], float),
                        rank_index_bpe=_opt(rec["rank_index_bpe"], float),
                        select_index_bpe=_opt(rec["select_index_bpe"], float),
                        offsets_bpe=_opt(rec["offsets_bpe"], float),
                        structural_bpe=_opt(rec["structural_bpe"], float),
                        total_bpe=_opt(rec["total_bpe"], float),
                    )
                )
            except ValueError as exc:
                raise SchemaError(f"line {lineno}: {exc}") from None
    return rows
