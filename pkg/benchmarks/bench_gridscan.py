#!/usr/bin/env python3
"""Benchmark the grid-scan kernel: compiled extension vs pure Python.

The face sweep is the hot loop of falsification (criterion: thousands of
exact form evaluations per sample, millions per fuzz run).  This compares
both implementations on identical inputs and reports the speedup.

Usage: python benchmarks/bench_gridscan.py [--faces 8,16,32,64] [--repeat 5]
"""

import argparse
import time
from fractions import Fraction

from cycquart import kernels
from cycquart.form import CyclicParams


def time_impl(impl: str, coeffs, d: int, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        kernels.face_scan_with(impl, coeffs, d)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--faces", default="8,16,32,64,128")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    faces = [int(v) for v in args.faces.split(",")]

    # a PSD sample: the sweep never exits early, so the full face is scanned
    c = CyclicParams(Fraction(2), Fraction(0), Fraction(0), Fraction(0))
    coeffs = kernels.scaled_coefficients(c)

    print(f"compiled kernel available: {kernels.HAVE_COMPILED}")
    print(f"{'face':>6} {'points':>9} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for d in faces:
        points = (2 * d + 1) ** 2
        py = time_impl("python", coeffs, d, args.repeat)
        if kernels.HAVE_COMPILED:
            cc = time_impl("compiled", coeffs, d, args.repeat)
            print(f"{d:>6} {points:>9} {py * 1e3:>10.3f}ms {cc * 1e3:>10.3f}ms "
                  f"{py / cc:>8.1f}x")
        else:
            print(f"{d:>6} {points:>9} {py * 1e3:>10.3f}ms {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()
