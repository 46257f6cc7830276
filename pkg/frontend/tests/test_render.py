import pytest

from benchplot import EXPECTED_COLUMNS, NoDataError, PlotConfig, render

from conftest import write_csv

ALL_STRUCTURES = ("BlockBitVec", "FastBitVec", "RRRBitVec")


def latency_points(golden_raw, ops, x_col):
    return {
        (float(r[x_col]), float(r["mean_ns"]))
        for r in golden_raw
        if r["op"] in ops and r["mean_ns"] != ""
    }


def test_pareto_renders_golden(tmp_path, golden_path, golden_raw):
    out = tmp_path / "pareto.png"
    result = render(PlotConfig(str(golden_path), str(out), "pareto"))
    assert out.stat().st_size > 0
    assert result.structures == ALL_STRUCTURES
    assert set(result.series) == {
        f"{panel}/{s}" for panel in ("rank", "select") for s in ALL_STRUCTURES
    }
    rank_pts = latency_points(golden_raw, ("rank1",), "total_bpe")
    sel_pts = latency_points(golden_raw, ("select1", "select0"), "total_bpe")
    for label, pts in result.series.items():
        source = rank_pts if label.startswith("rank/") else sel_pts
        assert set(pts) <= source, f"{label} plotted a point absent from the CSV"
    assert result.points == len(rank_pts) + len(sel_pts)


def test_rendering_is_deterministic(tmp_path, golden_path):
    a = render(PlotConfig(str(golden_path), str(tmp_path / "a.png"), "pareto"))
    b = render(PlotConfig(str(golden_path), str(tmp_path / "b.png"), "pareto"))
    assert a.series == b.series and a.structures == b.structures


def test_density_kinds_render_golden(tmp_path, golden_path, golden_raw):
    for kind, op in (("rank-density", "rank1"), ("select-density", "select1")):
        out = tmp_path / f"{kind}.png"
        result = render(PlotConfig(str(golden_path), str(out), kind))
        assert out.stat().st_size > 0
        # one n in the fixture, so labels are bare structure names
        assert set(result.series) == set(ALL_STRUCTURES)
        allowed = latency_points(golden_raw, (op,), "density")
        for pts in result.series.values():
            assert set(pts) <= allowed
            assert pts == sorted(pts)


def test_labels_carry_n_when_sizes_mix(tmp_path, golden_raw):
    doubled = [dict(r) for r in golden_raw]
    for r in golden_raw:
        if r["op"] == "rank1":
            grown = dict(r)
            grown["n"] = "200000"
            doubled.append(grown)
    path = write_csv(tmp_path / "two_sizes.csv", EXPECTED_COLUMNS, doubled)
    result = render(PlotConfig(str(path), str(tmp_path / "o.png"), "rank-density"))
    assert set(result.series) == {
        f"{s} n={n}" for s in ALL_STRUCTURES for n in (50000, 200000)
    }


def test_svg_output(tmp_path, golden_path):
    out = tmp_path / "fig.svg"
    render(PlotConfig(str(golden_path), str(out), "rank-density"))
    assert out.read_bytes().startswith(b"<?xml")


def test_space_only_csv_has_no_pareto_data(tmp_path, golden_raw):
    space = [r for r in golden_raw if r["op"] == "space"]
    path = write_csv(tmp_path / "space.csv", EXPECTED_COLUMNS, space)
    with pytest.raises(NoDataError):
        render(PlotConfig(str(path), str(tmp_path / "o.png"), "pareto"))


def test_select_only_csv_has_no_rank_data(tmp_path, golden_raw):
    sel = [r for r in golden_raw if r["op"] == "select1"]
    path = write_csv(tmp_path / "sel.csv", EXPECTED_COLUMNS, sel)
    with pytest.raises(NoDataError):
        render(PlotConfig(str(path), str(tmp_path / "o.png"), "rank-density"))
    with pytest.raises(NoDataError, match="rank"):
        render(PlotConfig(str(path), str(tmp_path / "o.png"), "pareto"))


def test_unknown_kind_rejected(tmp_path, golden_path):
    with pytest.raises(ValueError):
        render(PlotConfig(str(golden_path), str(tmp_path / "o.png"), "violin"))
