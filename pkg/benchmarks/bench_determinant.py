"""Benchmark the determinant kernels: compiled extension vs pure Python.

Two workloads:

* random   -- dense matrices with small random entries, where elimination
              overhead (loops, pivot search) dominates;
* hankel   -- moment matrices of the built-in families, where entries grow
              to hundreds of digits and big-integer multiplication dominates.

Each measurement is the best of --repeats runs on a fresh copy of the rows
(the kernels work in place). Both backends are checked to agree on every
matrix. Runs fine when the extension is not built; it then reports the
pure backend alone.

Usage: python benchmarks/bench_determinant.py [--orders 4,8,12,16] [--repeats 5]
"""

from __future__ import annotations

import argparse
import math
import random
import time

from hankel_approx.hankel import build_P_matrix
from hankel_approx.kernels import available_backends
from hankel_approx.moments import builtin_sequence


def random_matrix(rng: random.Random, order: int) -> list[list[int]]:
    return [[rng.randint(-999, 999) for _ in range(order)] for _ in range(order)]


def hankel_matrix(family: str, k: int | None, order: int) -> list[list[int]]:
    # P-matrix of the family at n = order - 2, row-scaled to integers.
    seq = builtin_sequence(family, k)
    M = build_P_matrix(seq, order - 2)
    rows = []
    for row in M.rows():
        scale = math.lcm(*(e.denominator for e in row))
        rows.append([int(e * scale) for e in row])
    return rows


def best_time(fn, rows: list[list[int]], repeats: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeats):
        work = [r[:] for r in rows]
        t0 = time.perf_counter()
        result = fn(work)
        best = min(best, time.perf_counter() - t0)
    return best, result


def run(cases, backends, repeats: int) -> None:
    names = list(backends)
    header = f"{'workload':<12} {'order':>5}" + "".join(f" {n + ' (ms)':>15}" for n in names)
    if len(names) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, rows in cases:
        times = []
        results = []
        for name in names:
            t, res = best_time(backends[name], rows, repeats)
            times.append(t)
            results.append(res)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"backends disagree on {label} order {len(rows)}")
        line = f"{label:<12} {len(rows):>5}" + "".join(f" {t * 1000:>15.3f}" for t in times)
        if len(times) == 2:
            line += f" {times[0] / times[1]:>8.2f}x"
        print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--orders", default="4,8,12,16",
                        help="comma-separated matrix orders (default 4,8,12,16)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="take the best of this many runs (default 5)")
    parser.add_argument("--seed", type=int, default=20250817)
    args = parser.parse_args()

    orders = [int(s) for s in args.orders.split(",") if s]
    backends = available_backends()
    # List pure first so the speedup column reads pure/compiled.
    ordered = {n: backends[n] for n in ("pure", "compiled") if n in backends}
    if "compiled" not in ordered:
        print("note: compiled kernel not built; timing the pure backend only\n")

    rng = random.Random(args.seed)
    cases = [("random", random_matrix(rng, order)) for order in orders]
    cases += [
        ("gompertz", hankel_matrix("gompertz", None, order)) for order in orders
    ]
    cases += [("zeta(2)", hankel_matrix("zeta", 2, order)) for order in orders]
    run(cases, ordered, args.repeats)


if __name__ == "__main__":
    main()
