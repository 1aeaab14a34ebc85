"""Integer kernels for the hot loops.

Every kernel has two implementations: a numba ``@njit`` version and a
pure-numpy version with the same signature and output. The dispatch names at
the bottom of the module pick one based on the ``PERMUTAHEDRA_NO_NUMBA``
environment variable (set it to ``1`` to force numpy). Both versions stay
importable so the benchmark and the tests can compare them directly.

All arrays are int64 and indexed by subset bitmask.
"""
import os

import numpy as np

# TBB in this image is too old and warns; omp is threadsafe for concurrent callers
os.environ.setdefault("NUMBA_THREADING_LAYER", "omp")
import numba  # noqa: E402
from numba import njit, prange  # noqa: E402

if numba.config.THREADING_LAYER == "default":
    numba.config.THREADING_LAYER = "omp"

USE_NUMBA = os.environ.get("PERMUTAHEDRA_NO_NUMBA", "").lower() not in ("1", "true", "yes")

# keep well clear of int64 overflow in partial sums
INT_LIMIT = 1 << 40


def fits_int64(values, d):
    bound = INT_LIMIT >> d
    return all(-bound < v < bound for v in values)


# ---------------------------------------------------------------- subset sums

@njit(cache=True)
def subset_sum_numba(vals, d, sign):
    out = vals.copy()
    n = 1 << d
    for i in range(d):
        bit = 1 << i
        for m in range(n):
            if m & bit:
                out[m] += sign * out[m ^ bit]
    return out


def subset_sum_numpy(vals, d, sign):
    out = np.array(vals, dtype=np.int64, copy=True)
    for i in range(d):
        bit = 1 << i
        v = out.reshape(-1, 2, bit)
        v[:, 1, :] += sign * v[:, 0, :]
    return out


# ------------------------------------------------------------ supermodularity

@njit(cache=True)
def supermodular_violation_numba(z, d):
    """First (K, i, j) with z[K+i] + z[K+j] > z[K+i+j] + z[K], else (-1, -1, -1).

    K runs in increasing mask order, then i < j (0-based) outside K.
    """
    n = 1 << d
    for K in range(n):
        for i in range(d):
            bi = 1 << i
            if K & bi:
                continue
            for j in range(i + 1, d):
                bj = 1 << j
                if K & bj:
                    continue
                if z[K | bi] + z[K | bj] > z[K | bi | bj] + z[K]:
                    return K, i, j
    return -1, -1, -1


def supermodular_violation_numpy(z, d):
    z = np.asarray(z, dtype=np.int64)
    masks = np.arange(1 << d)
    best = None
    for i in range(d):
        bi = 1 << i
        for j in range(i + 1, d):
            bj = 1 << j
            K = masks[(masks & (bi | bj)) == 0]
            bad = z[K | bi] + z[K | bj] > z[K | bi | bj] + z[K]
            if bad.any():
                cand = (int(K[np.argmax(bad)]), i, j)
                if best is None or cand < best:
                    best = cand
    return best if best is not None else (-1, -1, -1)


# ----------------------------------------------------------- lattice points
#
# Points of P(z) = {x : x([d]) = z[full], x(I) >= z[I]} are walked depth-first
# over x_0 .. x_{d-2}; x_{d-1} is forced by the hyperplane. After fixing x_k,
# every I inside the prefix {0..k} that contains k is checked against
# z[I] <= x(I) <= z[full] - z[full ^ I]. Both bounds are implied by the
# defining inequalities, so pruning never drops a point. Output order is
# lexicographic.

@njit(cache=True)
def _walk(z, d, x0, out, fill):
    n = 1 << d
    full = n - 1
    zf = z[full]
    lo = np.empty(d, np.int64)
    hi = np.empty(d, np.int64)
    for i in range(d):
        lo[i] = z[1 << i]
        hi[i] = zf - z[full ^ (1 << i)]
    sums = np.zeros(n, np.int64)
    x = np.zeros(d, np.int64)
    count = 0
    if d == 1:
        if fill:
            out[0, 0] = zf
        return 1
    last = d - 1
    head = (1 << last) - 1
    # depth 0 is pinned to x0
    x[0] = x0
    sums[1] = x0
    if x0 < lo[0] or x0 > hi[0]:
        return 0
    k = 1
    if k < last:
        x[k] = lo[k] - 1
    while True:
        if k == last:
            xl = zf - sums[head]
            ok = lo[last] <= xl <= hi[last]
            if ok:
                bit = 1 << last
                for I0 in range(bit):
                    if sums[I0] + xl < z[I0 | bit]:
                        ok = False
                        break
            if ok:
                if fill:
                    for t in range(last):
                        out[count, t] = x[t]
                    out[count, last] = xl
                count += 1
            k -= 1
            if k == 0:
                break
            continue
        x[k] += 1
        if x[k] > hi[k]:
            k -= 1
            if k == 0:
                break
            continue
        bit = 1 << k
        ok = True
        for I0 in range(bit):
            s = sums[I0] + x[k]
            I = I0 | bit
            sums[I] = s
            if s < z[I] or s > zf - z[full ^ I]:
                ok = False
                break
        if not ok:
            continue
        k += 1
        if k < last:
            x[k] = lo[k] - 1
    return count


@njit(cache=True, parallel=True)
def count_points_numba(z, d):
    full = (1 << d) - 1
    if d == 1:
        return 1
    lo = z[1]
    hi = z[full] - z[full ^ 1]
    if hi < lo:
        return 0
    dummy = np.zeros((1, d), np.int64)
    counts = np.zeros(hi - lo + 1, np.int64)
    for t in prange(hi - lo + 1):
        counts[t] = _walk(z, d, lo + t, dummy, False)
    return counts.sum()


@njit(cache=True)
def list_points_numba(z, d):
    full = (1 << d) - 1
    dummy = np.zeros((1, d), np.int64)
    if d == 1:
        out = np.empty((1, 1), np.int64)
        out[0, 0] = z[1]
        return out
    lo = z[1]
    hi = z[full] - z[full ^ 1]
    total = 0
    for x0 in range(lo, hi + 1):
        total += _walk(z, d, x0, dummy, False)
    out = np.empty((total, d), np.int64)
    pos = 0
    for x0 in range(lo, hi + 1):
        pos += _walk(z, d, x0, out[pos:], True)
    return out


def list_points_numpy(z, d):
    z = np.asarray(z, dtype=np.int64)
    n = 1 << d
    full = n - 1
    zf = z[full]
    if d == 1:
        return np.array([[zf]], dtype=np.int64)
    lo = [int(z[1 << i]) for i in range(d)]
    hi = [int(zf - z[full ^ (1 << i)]) for i in range(d)]
    # pts: (N, k) fixed coordinates; sums: (N, 2^k) partial sums over prefix subsets
    pts = np.arange(lo[0], hi[0] + 1, dtype=np.int64)[:, None]
    sums = np.zeros((len(pts), 2), dtype=np.int64)
    sums[:, 1] = pts[:, 0]
    for k in range(1, d - 1):
        vals = np.arange(lo[k], hi[k] + 1, dtype=np.int64)
        m = len(pts)
        pts = np.hstack([np.repeat(pts, len(vals), axis=0), np.tile(vals, m)[:, None]])
        low = np.repeat(sums, len(vals), axis=0)
        new = low + pts[:, k:k + 1]
        bit = 1 << k
        I = np.arange(bit) | bit
        keep = np.all((new >= z[I]) & (new <= zf - z[full ^ I]), axis=1)
        pts = pts[keep]
        sums = np.hstack([low[keep], new[keep]])
    last = d - 1
    bit = 1 << last
    xl = zf - sums[:, bit - 1]
    keep = (xl >= lo[last]) & (xl <= hi[last])
    I = np.arange(bit) | bit
    keep &= np.all(sums + xl[:, None] >= z[I], axis=1)
    return np.hstack([pts[keep], xl[keep][:, None]])


def count_points_numpy(z, d):
    return len(list_points_numpy(z, d))


if USE_NUMBA:
    subset_sum = subset_sum_numba
    supermodular_violation = supermodular_violation_numba
    count_points = count_points_numba
    list_points = list_points_numba
else:
    subset_sum = subset_sum_numpy
    supermodular_violation = supermodular_violation_numpy
    count_points = count_points_numpy
    list_points = list_points_numpy
