"""Command-line entry points for the fuzz and bench harnesses."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bench, fuzz


def _parse_u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def fuzz_main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fuzz",
        description="Differential fuzzer: checks the indexed structures against the naive oracle.",
    )
    parser.add_argument(
        "--suite",
        choices=("all",) + fuzz.SUITE_NAMES,
        default="all",
        help="which suite to run (default: all)",
    )
    parser.add_argument("--seed", type=_parse_u64, default=fuzz.DEFAULT_SEED, help="base seed")
    parser.add_argument(
        "--scale",
        type=float,
        default=1.0,
        help="multiplier on randomized assertion volume (default 1.0)",
    )
    parser.add_argument("--json", metavar="PATH", help="write the report as JSON")
    args = parser.parse_args(argv)

    suites = fuzz.SUITE_NAMES if args.suite == "all" else (args.suite,)

    def progress(rep):
        status = "ok" if rep.ok else f"{len(rep.failures)} FAILURES"
        print(
            f"{rep.suite}: vectors={rep.vectors} assertions={rep.assertions} [{status}]",
            flush=True,
        )

    t0 = time.perf_counter()
    try:
        reports = fuzz.run_suites(suites, seed=args.seed, scale=args.scale, progress=progress)
    except ValueError as exc:
        parser.error(str(exc))
    elapsed = time.perf_counter() - t0
    total_assertions = sum(r.assertions for r in reports)
    total_failures = sum(len(r.failures) for r in reports)
    print(f"total: assertions={total_assertions} failures={total_failures} ({elapsed:.1f}s)")
    if args.json:
        payload = {
            "seed": args.seed,
            "scale": args.scale,
            "suites": [r.to_dict() for r in reports],
            "total_assertions": total_assertions,
            "total_failures": total_failures,
        }
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
    for rep in reports:
        for f in rep.failures[:20]:
            print(f"FAIL {f.suite} {f.spec} {f.query}: expected {f.expected}, got {f.got}", file=sys.stderr)
    return 0 if total_failures == 0 else 1


def _parse_list(text: str, cast):
    try:
        return tuple(cast(part) for part in text.split(",") if part)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def bench_main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="bench",
        description="Latency/space benchmark harness; writes one CSV row per measurement.",
    )
    parser.add_argument(
        "--suite",
        choices=("all",) + bench.SUITES,
        default="all",
        help="which suite to run (default: all)",
    )
    parser.add_argument(
        "--sizes",
        type=lambda s: _parse_list(s, int),
        default=bench.DEFAULT_SIZES,
        help="comma-separated vector lengths (default 100000,1000000)",
    )
    parser.add_argument(
        "--densities",
        type=lambda s: _parse_list(s, float),
        default=bench.DEFAULT_DENSITIES,
        help="comma-separated densities (default 0.01,0.1,0.5,0.9,0.99)",
    )
    parser.add_argument("--seed", type=_parse_u64, default=bench.DEFAULT_SEED, help="base seed")
    parser.add_argument("--out", metavar="CSV_PATH", default="bench.csv", help="output CSV path")
    args = parser.parse_args(argv)

    def progress(rec):
        lat = f"{rec.mean_ns:.0f}ns" if rec.mean_ns is not None else "-"
        print(
            f"{rec.structure} {rec.op} n={rec.n} d={rec.density} {rec.pattern or '-'}: {lat}",
            flush=True,
        )

    t0 = time.perf_counter()
    try:
        if args.suite == "all":
            records = bench.run_all(args.sizes, args.densities, args.seed, progress=progress)
        else:
            records = bench.run_suite(
                args.suite, args.sizes, args.densities, args.seed, progress=progress
            )
    except ValueError as exc:
        parser.error(str(exc))
    bench.write_csv(records, args.out)
    print(f"wrote {len(records)} rows to {args.out} ({time.perf_counter() - t0:.1f}s)")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(fuzz_main() if sys.argv[1:2] == ["fuzz"] else bench_main())
