# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same signatures and semantics as `_pykernels`; see that module for the
contracts.  The DFS recursions here run without the GIL over CSR neighbor
arrays and a dense adjacency byte matrix.
"""

import numpy as np

cimport numpy as cnp

BACKEND_NAME = "cython"

ctypedef cnp.int64_t i64
ctypedef cnp.uint8_t u8


cdef i64 _hom_rec(int t, int pv, i64 n,
                  const i64[::1] indptr, const i64[::1] indices,
                  const u8[:, ::1] dense,
                  const i64[::1] con_off, const i64[::1] con_idx,
                  i64* assign) noexcept nogil:
    if t == pv:
        return 1
    cdef i64 total = 0
    cdef i64 c0 = con_off[t], c1 = con_off[t + 1]
    cdef i64 cand, j, a, first
    cdef bint ok
    if c1 > c0:
        first = assign[con_idx[c0]]
        for j in range(indptr[first], indptr[first + 1]):
            cand = indices[j]
            ok = 1
            for a in range(c0 + 1, c1):
                if dense[assign[con_idx[a]], cand] == 0:
                    ok = 0
                    break
            if ok:
                assign[t] = cand
                total += _hom_rec(t + 1, pv, n, indptr, indices, dense,
                                  con_off, con_idx, assign)
    else:
        for cand in range(n):
            assign[t] = cand
            total += _hom_rec(t + 1, pv, n, indptr, indices, dense,
                              con_off, con_idx, assign)
    return total


def hom_count(i64[::1] indptr, i64[::1] indices, u8[:, ::1] dense,
              long n, long pv, i64[::1] con_off, i64[::1] con_idx):
    if pv == 0:
        return 1
    cdef i64[::1] assign = np.zeros(pv, dtype=np.int64)
    cdef i64 total
    with nogil:
        total = _hom_rec(0, pv, n, indptr, indices, dense, con_off, con_idx, &assign[0])
    return int(total)


cdef i64 _icc_rec(int t, int m, const i64[::1] indptr, const i64[::1] indices,
                  const u8[:, ::1] dense, u8* used, i64* path,
                  i64* steps, i64 budget) noexcept nogil:
    if t == m:
        return dense[path[m - 1], path[0]]
    cdef i64 total = 0
    cdef i64 cand, j, r
    for j in range(indptr[path[t - 1]], indptr[path[t - 1] + 1]):
        cand = indices[j]
        if used[cand]:
            continue
        steps[0] += 1
        if steps[0] > budget:
            return -1
        used[cand] = 1
        path[t] = cand
        r = _icc_rec(t + 1, m, indptr, indices, dense, used, path, steps, budget)
        used[cand] = 0
        if r < 0:
            return -1
        total += r
    return total


def injective_cycle_count(i64[::1] indptr, i64[::1] indices, u8[:, ::1] dense,
                          long n, long m, long long budget):
    cdef cnp.ndarray[u8, ndim=1] used = np.zeros(n if n > 0 else 1, dtype=np.uint8)
    cdef i64[::1] path = np.zeros(m, dtype=np.int64)
    cdef i64 total = 0, steps = 0, r
    cdef i64 v0
    cdef u8* up = <u8*> used.data
    with nogil:
        for v0 in range(n):
            path[0] = v0
            up[v0] = 1
            r = _icc_rec(1, m, indptr, indices, dense, up, &path[0], &steps, budget)
            up[v0] = 0
            if r < 0:
                total = -1
                break
            total += r
    if total < 0:
        return -1, int(steps)
    return int(total), int(steps)


cdef bint _exists_rec(int t, int m, const i64[::1] indptr, const i64[::1] indices,
                      const u8[:, ::1] dense, u8* used, i64* path) noexcept nogil:
    if t == m:
        return dense[path[m - 1], path[0]] != 0
    cdef i64 cand, j
    for j in range(indptr[path[t - 1]], indptr[path[t - 1] + 1]):
        cand = indices[j]
        if used[cand]:
            continue
        used[cand] = 1
        path[t] = cand
        if _exists_rec(t + 1, m, indptr, indices, dense, used, path):
            used[cand] = 0
            return 1
        used[cand] = 0
    return 0


def cycle_exists(i64[::1] indptr, i64[::1] indices, u8[:, ::1] dense,
                 long n, long m):
    cdef cnp.ndarray[u8, ndim=1] used = np.zeros(n if n > 0 else 1, dtype=np.uint8)
    cdef i64[::1] path = np.zeros(m, dtype=np.int64)
    cdef i64 v0
    cdef bint found = 0
    cdef u8* up = <u8*> used.data
    with nogil:
        for v0 in range(n):
            path[0] = v0
            up[v0] = 1
            if _exists_rec(1, m, indptr, indices, dense, up, &path[0]):
                found = 1
                break
            up[v0] = 0
    return bool(found)


cdef struct KahanAcc:
    double total
    double comp


cdef inline void _kahan_add(KahanAcc* acc, double x) noexcept nogil:
    cdef double y = x - acc.comp
    cdef double t = acc.total + y
    acc.comp = (t - acc.total) - y
    acc.total = t


cdef void _mix_rec(int t, int pv, long s,
                   const i64[::1] dep_off, const i64[::1] dep_lo, const i64[::1] dep_edge,
                   const double[:, :, ::1] mats, i64* assign,
                   double prod, KahanAcc* acc) noexcept nogil:
    if t == pv:
        _kahan_add(acc, prod)
        return
    cdef i64 x, j
    cdef double p
    for x in range(s):
        p = prod
        for j in range(dep_off[t], dep_off[t + 1]):
            p *= mats[dep_edge[j], assign[dep_lo[j]], x]
            if p == 0.0:
                break
        if p == 0.0:
            continue
        assign[t] = x
        _mix_rec(t + 1, pv, s, dep_off, dep_lo, dep_edge, mats, assign, p, acc)


def mixed_expectation_sum(i64[::1] edge_a, i64[::1] edge_b,
                          double[:, :, ::1] mats, long pv, long s):
    # regroup edges by the later endpoint so products accumulate as maps extend
    cdef long e = edge_a.shape[0]
    dep = [[] for _ in range(pv)]
    cdef long i
    for i in range(e):
        a, b = int(edge_a[i]), int(edge_b[i])
        lo, hi = (a, b) if a < b else (b, a)
        dep[hi].append((lo, i))
    off = np.zeros(pv + 1, dtype=np.int64)
    lo_arr = np.zeros(e, dtype=np.int64)
    ed_arr = np.zeros(e, dtype=np.int64)
    k = 0
    for t in range(pv):
        for lo, i0 in dep[t]:
            lo_arr[k] = lo
            ed_arr[k] = i0
            k += 1
        off[t + 1] = k
    cdef i64[::1] dep_off = off
    cdef i64[::1] dep_lo = lo_arr
    cdef i64[::1] dep_edge = ed_arr
    cdef i64[::1] assign = np.zeros(pv if pv > 0 else 1, dtype=np.int64)
    cdef KahanAcc acc
    acc.total = 0.0
    acc.comp = 0.0
    with nogil:
        _mix_rec(0, pv, s, dep_off, dep_lo, dep_edge, mats, &assign[0], 1.0, &acc)
    return acc.total
