"""`plot` command: bench CSV in, figure out."""

from __future__ import annotations

import argparse
import sys

from .render import KINDS, PlotConfig, render
from .schema import NoDataError, SchemaError


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot",
        description="Render a figure from a bench CSV.",
    )
    parser.add_argument("--in", dest="csv", required=True, metavar="CSV", help="bench CSV path")
    parser.add_argument("--kind", choices=KINDS, required=True, help="figure kind")
    parser.add_argument("--out", required=True, metavar="PATH", help="output image path")
    parser.add_argument(
        "--format",
        default=None,
        help="image format (default: from the --out suffix)",
    )
    args = parser.parse_args(argv)

    config = PlotConfig(args.csv, args.out, args.kind, args.format)
    try:
        result = render(config)
    except SchemaError as exc:
        print(f"plot: schema error: {exc}", file=sys.stderr)
        return 2
    except NoDataError as exc:
        print(f"plot: no data: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"plot: {exc}", file=sys.stderr)
        return 1
    print(
        f"wrote {result.out_path}: {result.kind}, {result.points} points, "
        f"structures {', '.join(result.structures)}"
    )
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
