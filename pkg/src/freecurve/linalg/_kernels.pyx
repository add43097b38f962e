# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular hot loops.  Residues are < 2**31, so products fit int64."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, int32_t

cnp.import_array()


cdef inline Py_ssize_t _idx(Py_ssize_t D, Py_ssize_t b, Py_ssize_t c) nogil:
    return c * (D + 1) - (c * (c - 1)) // 2 + b


def add_shifted(int64_t[::1] acc, Py_ssize_t D, const int32_t[::1] tb, const int32_t[::1] tc,
                const int64_t[::1] coef, Py_ssize_t sb, Py_ssize_t sc, int64_t scalar, int64_t p):
    cdef Py_ssize_t i, j, n = tb.shape[0]
    scalar = scalar % p
    if scalar < 0:
        scalar += p
    with nogil:
        for i in range(n):
            j = _idx(D, tb[i] + sb, tc[i] + sc)
            acc[j] = (acc[j] + scalar * coef[i]) % p


def reduce_full(int64_t[::1] acc, Py_ssize_t D, const int32_t[::1] red,
                const int64_t[::1] offsets, const int32_t[::1] allb, const int32_t[::1] allc,
                const int64_t[::1] allcoef, const int32_t[::1] lmb, const int32_t[::1] lmc,
                const int32_t[::1] mono_b, const int32_t[::1] mono_c, int64_t p):
    cdef Py_ssize_t i, t, j, b, c, sb, sc, n = acc.shape[0]
    cdef int32_t g
    cdef int64_t v, neg
    with nogil:
        for i in range(n):
            v = acc[i]
            if v == 0:
                continue
            g = red[i]
            if g < 0:
                continue
            sb = mono_b[i] - lmb[g]
            sc = mono_c[i] - lmc[g]
            neg = p - v
            for t in range(offsets[g], offsets[g + 1]):
                b = allb[t] + sb
                c = allc[t] + sc
                j = c * (D + 1) - (c * (c - 1)) // 2 + b
                acc[j] = (acc[j] + neg * allcoef[t]) % p


cdef int64_t _inv(int64_t a, int64_t p) nogil:
    cdef int64_t t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def sparse_echelon(const int64_t[::1] indptr, const int64_t[::1] indices, const int64_t[::1] data,
                   const int64_t[::1] order, Py_ssize_t ncols, int64_t p):
    cdef int64_t[::1] acc = np.zeros(ncols, dtype=np.int64)
    cdef int64_t[::1] pivot_row = np.full(ncols, -1, dtype=np.int64)
    # pivot rows stored in growable flat buffers
    cdef Py_ssize_t cap = max(16, 4 * (indptr[indptr.shape[0] - 1] + 1))
    cdef int64_t[::1] pcols = np.empty(cap, dtype=np.int64)
    cdef int64_t[::1] pvals = np.empty(cap, dtype=np.int64)
    starts = [0]
    pivot_cols = []
    cdef Py_ssize_t used = 0, nrows_out = 0
    cdef Py_ssize_t ri, r, t, c, lo, lead, k, s0, s1, cnt
    cdef int64_t v, neg, inv
    cdef int64_t[::1] starts_buf = np.zeros(ncols + 1, dtype=np.int64)
    for ri in range(order.shape[0]):
        r = order[ri]
        if indptr[r] == indptr[r + 1]:
            continue
        lo = ncols
        for t in range(indptr[r], indptr[r + 1]):
            c = indices[t]
            v = data[t] % p
            if v < 0:
                v += p
            acc[c] = v
            if c < lo:
                lo = c
        lead = -1
        with nogil:
            for c in range(lo, ncols):
                v = acc[c]
                if v == 0:
                    continue
                k = pivot_row[c]
                if k < 0:
                    lead = c
                    break
                neg = p - v
                for t in range(starts_buf[k], starts_buf[k + 1]):
                    acc[pcols[t]] = (acc[pcols[t]] + neg * pvals[t]) % p
        if lead < 0:
            continue
        cnt = 0
        for c in range(lead, ncols):
            if acc[c] != 0:
                cnt += 1
        if used + cnt > cap:
            cap = 2 * (used + cnt)
            newc = np.empty(cap, dtype=np.int64)
            newv = np.empty(cap, dtype=np.int64)
            newc[:used] = np.asarray(pcols)[:used]
            newv[:used] = np.asarray(pvals)[:used]
            pcols = newc
            pvals = newv
        inv = _inv(acc[lead], p)
        for c in range(lead, ncols):
            v = acc[c]
            if v != 0:
                pcols[used] = c
                pvals[used] = v * inv % p
                used += 1
                acc[c] = 0
        pivot_row[lead] = nrows_out
        nrows_out += 1
        starts_buf[nrows_out] = used
        pivot_cols.append(lead)
    rows = []
    cols_np = np.asarray(pcols)
    vals_np = np.asarray(pvals)
    for k in range(nrows_out):
        s0 = starts_buf[k]
        s1 = starts_buf[k + 1]
        rows.append((cols_np[s0:s1].tolist(), vals_np[s0:s1].tolist()))
    return pivot_cols, rows
