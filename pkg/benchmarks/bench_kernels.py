#!/usr/bin/env python3
"""Time the compiled projection kernels against the numpy fallback.

Usage:
    python benchmarks/bench_kernels.py [--side 256] [--angles 64] [--repeat 5]
"""

import argparse
import time

import numpy as np

from shearadon import build_shift_table, rho_axis
from shearadon.kernels import available_backends


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--side", type=int, default=256, help="image side")
    parser.add_argument("--angles", type=int, default=64, help="exact-projector angle count")
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions (best is kept)")
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("note: compiled extension not built; timing the numpy backend only")

    rng = np.random.default_rng(42)
    n = args.side
    pixels = rng.integers(0, 256, size=(n, n), dtype=np.uint8)
    table = np.ascontiguousarray(build_shift_table(n).s)
    centers = rho_axis(n)
    angles = np.radians(np.linspace(0.0, 179.0, args.angles))

    jobs = [
        ("octant projection (all angles)", lambda mod: mod.project_all_angles(pixels, table)),
        (
            f"exact projector ({args.angles} angles)",
            lambda mod: mod.exact_project(pixels, angles, float(centers[0]), len(centers)),
        ),
    ]

    print(f"image {n}x{n}, best of {args.repeat} runs\n")
    print(f"{'kernel':<34} {'backend':<10} {'seconds':>10} {'speedup':>9}")
    for label, job in jobs:
        base = None
        for name in ("python", "compiled"):
            if name not in backends:
                continue
            secs = best_of(args.repeat, job, backends[name])
            if base is None:
                base = secs
                rel = ""
            else:
                rel = f"{base / secs:8.1f}x"
            print(f"{label:<34} {name:<10} {secs:>10.4f} {rel:>9}")


if __name__ == "__main__":
    main()
