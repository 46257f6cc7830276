"""Figure rendering. Every plotted point is a row from the CSV; the only
processing here is selection, grouping, and sorting."""

from __future__ import annotations

from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .schema import BenchRow, NoDataError, read_rows

KINDS = ("pareto", "rank-density", "select-density")

_SELECT_OPS = ("select1", "select0")


@dataclass(frozen=True)
class PlotConfig:
    csv_path: str
    out_path: str
    kind: str
    image_format: str | None = None  # default: inferred from out_path suffix


@dataclass
class RenderResult:
    kind: str
    out_path: str
    structures: tuple[str, ...]
    points: int
    # label -> sorted (x, y) pairs, exactly what was handed to matplotlib
    series: dict[str, list[tuple[float, float]]] = field(default_factory=dict)


def _latency_rows(rows: list[BenchRow], ops) -> list[BenchRow]:
    return [r for r in rows if r.op in ops and r.mean_ns is not None]


def pareto_series(rows: list[BenchRow], ops) -> dict[str, list[tuple[float, float]]]:
    """Per-structure (total_bpe, mean_ns) points for the given ops."""
    out: dict[str, list[tuple[float, float]]] = {}
    for r in _latency_rows(rows, ops):
        if r.total_bpe is None:
            continue
        out.setdefault(r.structure, []).append((r.total_bpe, r.mean_ns))
    return {s: sorted(pts) for s, pts in sorted(out.items())}


def density_series(rows: list[BenchRow], op: str) -> dict[str, list[tuple[float, float]]]:
    """Per-structure (density, mean_ns) curves; labels carry n when several
    vector lengths are present."""
    groups: dict[tuple[str, int], list[tuple[float, float]]] = {}
    for r in _latency_rows(rows, (op,)):
        groups.setdefault((r.structure, r.n), []).append((r.density, r.mean_ns))
    sizes = {n for _, n in groups}
    out = {}
    for (structure, n), pts in sorted(groups.items()):
        label = structure if len(sizes) == 1 else f"{structure} n={n}"
        out[label] = sorted(pts)
    return out


_MARKERS = ("o", "s", "^", "D", "v", "P", "X")


def _marker(k: int) -> str:
    return _MARKERS[k % len(_MARKERS)]


def render(config: PlotConfig) -> RenderResult:
    if config.kind not in KINDS:
        raise ValueError(f"unknown figure kind {config.kind!r}")
    rows = read_rows(config.csv_path)
    result = RenderResult(kind=config.kind, out_path=config.out_path, structures=(), points=0)

    if config.kind == "pareto":
        rank = pareto_series(rows, ("rank1",))
        select = pareto_series(rows, _SELECT_OPS)
        if not rank:
            raise NoDataError("no rank latency rows for the pareto figure")
        if not select:
            raise NoDataError("no select latency rows for the pareto figure")
        fig, axes = plt.subplots(1, 2, figsize=(9, 4), sharex=True)
        for ax, panel, title in ((axes[0], rank, "rank"), (axes[1], select, "select")):
            for k, (structure, pts) in enumerate(panel.items()):
                ax.plot(
                    [x for x, _ in pts],
                    [y for _, y in pts],
                    linestyle="none",
                    marker=_marker(k),
                    label=structure,
                )
            ax.set_yscale("log")
            ax.set_title(title)
            ax.set_xlabel("space (bits per element)")
            ax.grid(True, which="both", alpha=0.3)
        axes[0].set_ylabel("latency (ns per query)")
        axes[0].legend()
        result.series = {f"rank/{s}": pts for s, pts in rank.items()}
        result.series.update({f"select/{s}": pts for s, pts in select.items()})
        structures = set(rank) | set(select)
    else:
        op = "rank1" if config.kind == "rank-density" else "select1"
        curves = density_series(rows, op)
        if not curves:
            raise NoDataError(f"no {op} latency rows for the {config.kind} figure")
        fig, ax = plt.subplots(figsize=(6, 4))
        for k, (label, pts) in enumerate(curves.items()):
            ax.plot(
                [x for x, _ in pts],
                [y for _, y in pts],
                marker=_marker(k),
                label=label,
            )
        ax.set_xlabel("density of set bits")
        ax.set_ylabel(f"{op} latency (ns per query)")
        ax.grid(True, alpha=0.3)
        ax.legend()
        result.series = curves
        structures = {label.split(" n=")[0] for label in curves}

    result.structures = tuple(sorted(structures))
    result.points = sum(len(pts) for pts in result.series.values())
    fig.tight_layout()
    fig.savefig(config.out_path, format=config.image_format)
    plt.close(fig)
    return result
