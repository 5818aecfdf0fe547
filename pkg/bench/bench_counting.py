"""Benchmark the lattice-point counting backends against each other.

Counts dilates of a few fixed polytopes with every available backend
(numba JIT, vectorized numpy, pure python) and prints a timing table.
Results are asserted identical across backends before timing.

Usage: python bench/bench_counting.py [--max-dilate N] [--repeat R]
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction as F

from quasigrade import _kernels as kn
from quasigrade import polytope as pt


def cases():
    return [
        ("unit square", pt.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])),
        ("half triangle", pt.from_vertices([(0, 0), (F(1, 2), 0), (0, F(1, 2))])),
        ("unit cube", pt.from_vertices([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])),
        ("third simplex 3d", pt.from_vertices([(0, 0, 0), (F(4, 3), 0, 0), (0, F(4, 3), 0), (0, 0, F(4, 3))])),
    ]


def bench(poly, backend: str, max_dilate: int, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for n in range(1, max_dilate + 1):
            pt.count_lattice_points(poly, n, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-dilate", type=int, default=40)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kn.available_backends()
    print(f"backends: {', '.join(backends)} (default: {kn.active_backend()})")
    print(f"dilates 1..{args.max_dilate}, best of {args.repeat} runs\n")
    header = f"{'polytope':<18}" + "".join(f"{b:>12}" for b in backends) + f"{'numba speedup':>16}"
    print(header)
    print("-" * len(header))
    for name, poly in cases():
        counts = {
            b: pt.count_lattice_points(poly, args.max_dilate, backend=b) for b in backends
        }
        assert len(set(counts.values())) == 1, f"backend disagreement on {name}: {counts}"
        times = {b: bench(poly, b, args.max_dilate, args.repeat) for b in backends}
        row = f"{name:<18}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if "numba" in times:
            slowest = max(t for b, t in times.items() if b != "numba")
            row += f"{slowest / times['numba']:>15.1f}x"
        print(row)


if __name__ == "__main__":
    main()
