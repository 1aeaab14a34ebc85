"""Numba vs numpy for the integer kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case checks that both backends agree before timing them. The first
numba call (compilation, or cache load) is excluded.
"""
import argparse
import time

import numpy as np

from permutahedra import _kernels as K
from permutahedra.setfun import SetFunction, popcount


def best_of(f, repeat):
    ts = []
    for _ in range(repeat):
        t = time.perf_counter()
        f()
        ts.append(time.perf_counter() - t)
    return min(ts)


def perm_z(d, scale=1):
    return SetFunction.from_function(d, lambda m: scale * popcount(m) * (popcount(m) + 1) // 2).as_int_array()


def cases():
    rng = np.random.default_rng(0)
    for d in (12, 16, 20):
        v = rng.integers(-1000, 1000, size=1 << d)
        v[0] = 0
        yield f"zeta d={d}", K.subset_sum_numba, K.subset_sum_numpy, (v, d, 1)
    for d in (10, 14):
        z = perm_z(d)
        yield f"supermodular d={d}", K.supermodular_violation_numba, K.supermodular_violation_numpy, (z, d)
    for d, s in ((4, 6), (5, 2), (6, 1)):
        z = perm_z(d, s)
        yield f"count points perm d={d} x{s}", K.count_points_numba, K.count_points_numpy, (z, d)


def same(a, b):
    if isinstance(a, tuple):
        return tuple(map(int, a)) == tuple(map(int, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':32s} {'numba':>10s} {'numpy':>10s} {'ratio':>7s}")
    for name, fnb, fnp, a in cases():
        rb, rp = fnb(*a), fnp(*a)
        assert same(rb, rp), name
        tb = best_of(lambda: fnb(*a), args.repeat)
        tp = best_of(lambda: fnp(*a), args.repeat)
        print(f"{name:32s} {tb * 1e3:9.2f}ms {tp * 1e3:9.2f}ms {tp / tb:6.1f}x")


if __name__ == "__main__":
    main()
