"""Command line front end: count, gen, verify, bench.

Exit codes: 0 success, 2 malformed input or invalid generator/flag spec,
3 correctness or invariant failure.  Results go to stdout (or the named
output file); diagnostics go to stderr.  No environment variables are read.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, fields

from . import _kernels
from .counters import INNER_COUNTERS
from .engine import count_inversions
from .formats import FormatError, parse_binary, parse_text, render_binary, render_text
from .generators import GENERATOR_METHODS, GenSpec, generate, max_inversions
from .instrumentation import assert_phase_bounds, assert_qhat_bound, stats_lines
from .oracle import brute_count
from .verify import check_sequence, exhaustive_sweep, random_keys, shrink
from .rng import Xorshift64Star

__all__ = ["BenchRecord", "main"]

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CORRECTNESS = 3


@dataclass(frozen=True)
class BenchRecord:
    """One CSV row of cmd_bench; field order is the column order."""

    n: int
    generator: str
    parameter: int
    seed: int
    inv: int
    final_q: int
    phases: int
    header_comparisons: int
    split_count: int
    split_work: int
    inner_name: str
    wall_time_ns: int
    count: int


BENCH_COLUMNS = [f.name for f in fields(BenchRecord)]


def _read_input(path: str, fmt: str) -> list[int]:
    if fmt == "binary":
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
        return parse_binary(data)
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r") as fh:
            text = fh.read()
    return parse_text(text)


def _cmd_count(args: argparse.Namespace) -> int:
    try:
        keys = _read_input(args.input, args.format)
    except FormatError as exc:
        print(f"count: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"count: {exc}", file=sys.stderr)
        return EXIT_INPUT
    count, stats = count_inversions(keys, inner=INNER_COUNTERS[args.inner])
    if args.oracle:
        if len(keys) > args.oracle_limit:
            print(
                f"count: --oracle guard: {len(keys)} keys exceed limit "
                f"{args.oracle_limit} (raise with --oracle-limit)",
                file=sys.stderr,
            )
            return EXIT_INPUT
        expected = brute_count(keys, limit=args.oracle_limit)
        if expected != count:
            print(
                f"count: oracle mismatch: engine {count}, brute force {expected}",
                file=sys.stderr,
            )
            return EXIT_CORRECTNESS
    print(count)
    if args.stats:
        for line in stats_lines(stats):
            print(line, file=sys.stderr)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(n=args.n, method=args.method, parameter=args.param, seed=args.seed)
    try:
        keys = generate(spec)
    except ValueError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "binary":
        payload = render_binary(keys)
        if args.output == "-":
            sys.stdout.buffer.write(payload)
        else:
            with open(args.output, "wb") as fh:
                fh.write(payload)
    else:
        text = render_text(keys)
        if args.output == "-":
            sys.stdout.write(text)
        else:
            with open(args.output, "w") as fh:
                fh.write(text)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.n_max < 0:
        print("verify: --n-max must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    if args.n_max > 100_000:
        print("verify: --n-max above the oracle guard of 100000", file=sys.stderr)
        return EXIT_INPUT
    checked = 0
    if args.exhaustive:
        if args.n_max > 8:
            print("verify: exhaustive mode requires --n-max <= 8", file=sys.stderr)
            return EXIT_INPUT
        bad = exhaustive_sweep(args.n_max)
        if bad is not None:
            return _report_mismatch(bad)
        checked += 1
        print(
            f"verify: exhaustive permutations of 1..{args.n_max} passed",
            file=sys.stderr,
        )
    rng = Xorshift64Star(args.seed)
    for _ in range(args.trials):
        length = rng.below(args.n_max + 1) if args.n_max else 0
        keys = random_keys(rng, length, args.alphabet)
        bad = check_sequence(keys)
        if bad is not None:
            return _report_mismatch(bad)
    print(f"verify: {args.trials} randomized trials passed", file=sys.stderr)
    return EXIT_OK


def _report_mismatch(bad) -> int:
    minimal = shrink(bad)
    print(
        f"verify: mismatch with inner={minimal.inner_name}: engine {minimal.got}, "
        f"brute force {minimal.expected}",
        file=sys.stderr,
    )
    print(f"verify: minimal failing input: {minimal.keys}", file=sys.stderr)
    return EXIT_CORRECTNESS


def _parse_int_list(raw: str, flag: str) -> list[int]:
    try:
        return [int(tok) for tok in raw.split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag}: expected comma-separated integers")


def _parse_float_list(raw: str, flag: str) -> list[float]:
    try:
        return [float(tok) for tok in raw.split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag}: expected comma-separated numbers")


def _cmd_bench(args: argparse.Namespace) -> int:
    sizes = args.sizes
    ratios = args.inv_per_n
    inners = args.inner.split(",")
    for name in inners:
        if name not in INNER_COUNTERS:
            print(f"bench: unknown inner counter {name!r}", file=sys.stderr)
            return EXIT_INPUT
    if args.repeats < 1:
        print("bench: --repeats must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    if any(n < 0 for n in sizes) or any(x < 0 for x in ratios):
        print("bench: sizes and inv-per-n must be nonnegative", file=sys.stderr)
        return EXIT_INPUT

    if _kernels.HAVE_NUMBA:
        _kernels.warmup()  # keep JIT compilation out of the timings

    rows: list[BenchRecord] = []
    problems: list[str] = []
    cell = 0
    for n in sizes:
        for ratio in ratios:
            k = min(int(round(n * ratio)), max_inversions(n))
            seed = args.seed + cell
            cell += 1
            spec = GenSpec(n=n, method="adjacent_swaps", parameter=k, seed=seed)
            keys = generate(spec)
            for inner_name in inners:
                inner = INNER_COUNTERS[inner_name]
                for _ in range(args.repeats):
                    t0 = time.perf_counter_ns()
                    count, stats = count_inversions(keys, inner=inner)
                    wall = time.perf_counter_ns() - t0
                    rec = BenchRecord(
                        n=n,
                        generator="adjacent_swaps",
                        parameter=k,
                        seed=seed,
                        inv=k,
                        final_q=stats.final_q,
                        phases=stats.phase_count,
                        header_comparisons=stats.total_header_comparisons,
                        split_count=stats.split_count,
                        split_work=stats.split_work,
                        inner_name=inner_name,
                        wall_time_ns=0 if args.no_timing else wall,
                        count=count,
                    )
                    rows.append(rec)
                    if count != k:
                        problems.append(
                            f"row {len(rows)}: count {count} != expected inversions {k}"
                        )
                    for v in assert_phase_bounds(stats, n):
                        problems.append(f"row {len(rows)}: {v.kind}: {v.message}")
                    v = assert_qhat_bound(stats, n, count)
                    if v is not None:
                        problems.append(f"row {len(rows)}: {v.kind}: {v.message}")

    _write_csv(args.csv, rows)
    print(
        f"bench: {len(rows)} rows, {len(problems)} invariant violations",
        file=sys.stderr,
    )
    for line in problems:
        print(f"bench: {line}", file=sys.stderr)
    return EXIT_CORRECTNESS if problems else EXIT_OK


def _write_csv(path: str, rows: list[BenchRecord]) -> None:
    # header once; appending to an existing file adds rows only
    if path == "-":
        _write_rows(sys.stdout, rows, header=True)
        return
    try:
        with open(path, "x", newline="") as fh:
            _write_rows(fh, rows, header=True)
    except FileExistsError:
        with open(path, "a", newline="") as fh:
            _write_rows(fh, rows, header=False)


def _write_rows(fh, rows: list[BenchRecord], header: bool) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    if header:
        writer.writerow(BENCH_COLUMNS)
    for rec in rows:
        writer.writerow([getattr(rec, name) for name in BENCH_COLUMNS])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invcount",
        description="Adaptive inversion counting: runs cost O(n + n lg(Inv/n)).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count inversions of a key sequence")
    p_count.add_argument("input", nargs="?", default="-", help="file path or - for stdin")
    p_count.add_argument("--format", choices=("text", "binary"), default="text")
    p_count.add_argument("--inner", choices=tuple(INNER_COUNTERS), default="merge")
    p_count.add_argument(
        "--stats", action="store_true", help="print key=value run statistics to stderr"
    )
    p_count.add_argument(
        "--oracle", action="store_true", help="cross-check against the quadratic oracle"
    )
    p_count.add_argument("--oracle-limit", type=int, default=100_000)
    p_count.set_defaults(func=_cmd_count)

    p_gen = sub.add_parser("gen", help="generate a key sequence")
    p_gen.add_argument("output", nargs="?", default="-", help="file path or - for stdout")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--method", choices=GENERATOR_METHODS, required=True)
    p_gen.add_argument("--param", type=int, default=0)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--format", choices=("text", "binary"), default="text")
    p_gen.set_defaults(func=_cmd_gen)

    p_verify = sub.add_parser("verify", help="cross-check the engine against the oracle")
    p_verify.add_argument("--n-max", type=int, default=64)
    p_verify.add_argument("--trials", type=int, default=200)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument(
        "--alphabet", type=int, default=0, help="alphabet size; 0 means full 64-bit"
    )
    p_verify.add_argument(
        "--exhaustive",
        action="store_true",
        help="also sweep all permutations of 1..n-max (requires n-max <= 8)",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="benchmark runs into a CSV file")
    p_bench.add_argument(
        "--sizes", type=lambda s: _parse_int_list(s, "--sizes"), required=True
    )
    p_bench.add_argument(
        "--inv-per-n", type=lambda s: _parse_float_list(s, "--inv-per-n"), required=True
    )
    p_bench.add_argument("--inner", default="merge", help="comma-separated counters")
    p_bench.add_argument("--repeats", type=int, default=1)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--csv", default="-", help="CSV path or - for stdout")
    p_bench.add_argument(
        "--no-timing",
        action="store_true",
        help="write 0 in wall_time_ns for byte-identical output",
    )
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
