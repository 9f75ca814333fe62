# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled column-profile kernel.

Same contract as ``codepoly._pykernels.column_profiles``.
"""

import numpy as np

cdef Py_ssize_t BLOCK = 65536


def column_profiles(words, int g, long long q, ref=None):
    cdef Py_ssize_t N = len(words)
    cdef Py_ssize_t n = len(words[0])
    cdef Py_ssize_t i, j, t, k, blk, filled
    cdef long long s
    cdef long long total = 1
    for j in range(g):
        total *= N

    w = np.asarray(words, dtype=np.int64).reshape(N, n)
    scaled_np = np.empty((g, N, n), dtype=np.int64)
    cdef long long qj = 1
    for j in range(g):
        scaled_np[j] = w * qj
        qj *= q
    base_np = np.zeros(n, dtype=np.int64)
    if ref is not None:
        base_np[:] = np.asarray(ref, dtype=np.int64) * qj

    cdef long long[:, :, ::1] scaled = scaled_np
    cdef long long[::1] base = base_np
    cdef Py_ssize_t[::1] idx = np.zeros(max(g, 1), dtype=np.intp)

    blk = BLOCK if total > BLOCK else total
    out_np = np.empty((blk, n), dtype=np.int64)
    cdef long long[:, ::1] out = out_np

    counts = {}
    filled = 0
    for t in range(total):
        for i in range(n):
            s = base[i]
            for j in range(g):
                s += scaled[j, idx[j], i]
            # insertion sort into the output row
            k = i
            while k > 0 and out[filled, k - 1] > s:
                out[filled, k] = out[filled, k - 1]
                k -= 1
            out[filled, k] = s
        filled += 1
        # odometer, last slot fastest
        j = g - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < N:
                break
            idx[j] = 0
            j -= 1
        if filled == blk or t == total - 1:
            _flush(out, filled, n, counts)
            filled = 0
    return counts


cdef void _flush(long long[:, ::1] out, Py_ssize_t filled, Py_ssize_t n, dict counts):
    """Sort the block's rows, then count runs of equal rows."""
    cdef Py_ssize_t r, i, start, prev, cur
    cdef bint same
    block = np.asarray(out)[:filled]
    # lexsort keys are read last-to-first, so reverse the columns
    order_np = np.lexsort(block.T[::-1]).astype(np.intp)
    cdef Py_ssize_t[::1] order = order_np
    start = 0
    for r in range(1, filled + 1):
        same = r < filled
        if same:
            prev = order[r - 1]
            cur = order[r]
            for i in range(n):
                if out[prev, i] != out[cur, i]:
                    same = False
                    break
        if not same:
            prev = order[start]
            key = tuple([out[prev, i] for i in range(n)])
            counts[key] = counts.get(key, 0) + (r - start)
            start = r
