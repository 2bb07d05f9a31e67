"""Benchmark: compiled kernels vs the pure-Python fallback.

Run: python3 benchmarks/bench_kernels.py
"""

import random
import time

import numpy as np

from setfix import _purekern
from setfix.oracle import random_metric

try:
    from setfix import _fastkern
except ImportError:
    _fastkern = None


def bench(fn, args_list, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def matrix_cases(rng, count, n):
    cases = []
    sp = random_metric(rng, n)
    for _ in range(count):
        a = np.array(sorted(rng.sample(range(n), rng.randint(1, n))), dtype=np.intp)
        b = np.array(sorted(rng.sample(range(n), rng.randint(1, n))), dtype=np.intp)
        cases.append((sp.dist, a, b))
    return cases


def euclidean_cases(rng, count, dim, size):
    cases = []
    for _ in range(count):
        A = np.random.default_rng(rng.randrange(2**32)).uniform(-10, 10, (size, dim))
        B = np.random.default_rng(rng.randrange(2**32)).uniform(-10, 10, (size, dim))
        cases.append((A, B))
    return cases


def main():
    rng = random.Random(42)
    rows = []
    for label, cases in (
        ("hausdorff_matrix n=12", matrix_cases(rng, 5000, 12)),
        ("hausdorff_euclidean d=3 |A|=12", euclidean_cases(rng, 5000, 3, 12)),
    ):
        fn_name = label.split()[0]
        t_py = bench(getattr(_purekern, fn_name), cases)
        if _fastkern is not None:
            t_cy = bench(getattr(_fastkern, fn_name), cases)
            for a, b in zip(cases[:50], cases[:50]):
                assert getattr(_purekern, fn_name)(*a) == getattr(_fastkern, fn_name)(*b)
            rows.append((label, t_py, t_cy, t_py / t_cy))
        else:
            rows.append((label, t_py, None, None))

    print(f"{'case':34} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, t_py, t_cy, speedup in rows:
        if t_cy is None:
            print(f"{label:34} {t_py:9.4f}s  (compiled kernel not built)")
        else:
            print(f"{label:34} {t_py:9.4f}s {t_cy:9.4f}s {speedup:7.1f}x")


if __name__ == "__main__":
    main()
