from .render import KINDS, PlotConfig, RenderResult, density_series, pareto_series, render
from .schema import EXPECTED_COLUMNS, BenchRow, NoDataError, SchemaError, read_rows

__all__ = [
    "KINDS",
    "PlotConfig",
    "RenderResult",
    "density_series",
    "pareto_series",
    "render",
    "EXPECTED_COLUMNS",
    "BenchRow",
    "NoDataError",
    "SchemaError",
    "read_rows",
]
