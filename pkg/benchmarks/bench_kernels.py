"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Each row times one kernel on fixed random inputs with both backends, checks
that the outputs agree, and reports the speedup.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from lcdcodes import _pure
from lcdcodes.galois import field_of_order

try:
    from lcdcodes import _kernels
except ImportError:
    raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation` first")


def cases(quick: bool):
    rng = np.random.default_rng(2024)
    for q, size in [(5, 24), (16, 24), (256, 24), (5, 64)][: 2 if quick else None]:
        F = field_of_order(q)
        A = rng.integers(0, q, size=(size, size))
        B = rng.integers(0, q, size=(size, size))
        yield f"rref {size}x{size} F_{q}", lambda m, A=A, F=F: m.rref(A, F)
        yield f"det {size}x{size} F_{q}", lambda m, A=A, F=F: m.det(A, F)
        yield f"matmul {size}x{size} F_{q}", lambda m, A=A, B=B, F=F: m.matmul(A, B, F)
    for q, k, n in [(5, 5, 12), (9, 4, 12), (16, 4, 12), (25, 4, 12)][: 2 if quick else None]:
        F = field_of_order(q)
        G = rng.integers(0, q, size=(k, n))
        yield f"min_weight [{n},{k}] F_{q}", lambda m, G=G, F=F: m.min_weight(G, F, 1)


def same(x, y):
    if isinstance(x, tuple):
        return all(same(a, b) for a, b in zip(x, y))
    if isinstance(x, np.ndarray):
        return np.array_equal(x, y)
    return list(x) == list(y) if isinstance(x, list) else x == y


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small subset, for smoke testing")
    args = ap.parse_args(argv)
    print(f"{'kernel':<28}{'compiled (ms)':>15}{'python (ms)':>14}{'speedup':>10}")
    for label, run in cases(args.quick):
        assert same(run(_kernels), run(_pure)), f"backends disagree on {label}"
        tc = min(timeit.repeat(lambda: run(_kernels), number=1, repeat=args.repeat))
        tp = min(timeit.repeat(lambda: run(_pure), number=1, repeat=args.repeat))
        print(f"{label:<28}{tc * 1e3:>15.3f}{tp * 1e3:>14.2f}{tp / tc:>9.0f}x")


if __name__ == "__main__":
    main()
