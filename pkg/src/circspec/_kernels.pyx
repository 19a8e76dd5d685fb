# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops. Semantics mirror circspec._fallback exactly."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, hypot, sqrt
from libc.stdlib cimport qsort, malloc, free

cnp.import_array()


def jacobi_eigenvalues(double[:, ::1] a, double tol, int max_sweeps):
    """Cyclic Jacobi on a symmetric matrix, in place. Returns (diag, sweeps);
    sweeps is -1 if the off-diagonal norm is still above tol after max_sweeps."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k
    cdef double off, apq, app, aqq, theta, t, c, s, akp, akq
    cdef int sweep
    cdef double skip
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                off += a[p, q] * a[p, q]
        if sqrt(2.0 * off) <= tol:
            return np.asarray(np.diagonal(np.asarray(a))).copy(), sweep
        if sweep == max_sweeps:
            break
        # entries below tol/n are dropped: their total contribution stays under tol
        skip = tol / n
        if sweep < 3:
            skip = max(skip, 0.2 * sqrt(2.0 * off) / (n * n))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if fabs(apq) <= skip:
                    if sweep >= 3:
                        a[p, q] = 0.0
                        a[q, p] = 0.0
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0:
                    t = 1.0 / (theta + hypot(1.0, theta))
                else:
                    t = -1.0 / (-theta + hypot(1.0, theta))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[p, k]
                    akq = a[q, k]
                    a[p, k] = c * akp - s * akq
                    a[q, k] = s * akp + c * akq
                for k in range(n):
                    a[k, p] = a[p, k]
                    a[k, q] = a[q, k]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    return np.asarray(np.diagonal(np.asarray(a))).copy(), -1


def prime_distinct_counts(long p, long[::1] masks):
    """For each pair-bitmask symbol of G(p; S), the number of distinct eigenvalues.

    Bit b stands for the residue pair {b+1, p-b-1}. Multiplier i sends the pair
    of r to the pair of i*r; distinct eigenvalues = 1 + distinct images of S.
    """
    cdef long h = (p - 1) // 2
    cdef long nm = masks.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=2] perm = np.zeros((h, h), dtype=np.int64)
    cdef long i, b, r, x, idx, j, cnt, m, img
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.zeros(nm, dtype=np.int64)
    cdef long images[64]
    for i in range(1, h + 1):
        for b in range(h):
            r = (i * (b + 1)) % p
            x = r if r <= h else p - r
            perm[i - 1, b] = x - 1
    for idx in range(nm):
        m = masks[idx]
        cnt = 0
        for i in range(h):
            img = 0
            for b in range(h):
                if (m >> b) & 1:
                    img |= (<long>1) << perm[i, b]
            for j in range(cnt):
                if images[j] == img:
                    break
            else:
                images[cnt] = img
                cnt += 1
        out[idx] = cnt + 1
    return out


cdef int _cmp_long(const void* x, const void* y) noexcept nogil:
    cdef long a = (<long*>x)[0]
    cdef long b = (<long*>y)[0]
    return (a > b) - (a < b)


def gray_realizable(long[:, ::1] rows, long[::1] degs, long[::1] target_sorted,
                    long target_degree, long lo, long hi):
    """Walk Gray codes g(lo) .. g(hi-1) over the k divisor rows.

    Returns the first Gray code whose eigenvalue vector sorts to target_sorted,
    or -1. The degree is tracked per step; the eigenvalue vector is brought up
    to date lazily, only for codes whose degree equals target_degree.
    """
    cdef Py_ssize_t k = rows.shape[0]
    cdef Py_ssize_t n = rows.shape[1]
    cdef long* lam = <long*>malloc(n * sizeof(long))
    cdef long* buf = <long*>malloc(n * sizeof(long))
    cdef long g, prev, diff, deg, it, synced
    cdef Py_ssize_t j, bit
    cdef bint same
    try:
        for j in range(n):
            lam[j] = 0
        synced = 0
        deg = 0
        g = lo ^ (lo >> 1)
        for bit in range(k):
            if (g >> bit) & 1:
                deg += degs[bit]
        prev = g
        for it in range(lo, hi):
            g = it ^ (it >> 1)
            if it != lo:
                diff = g ^ prev
                bit = 0
                while not ((diff >> bit) & 1):
                    bit += 1
                if (g >> bit) & 1:
                    deg += degs[bit]
                else:
                    deg -= degs[bit]
                prev = g
            if g == 0 or deg != target_degree:
                continue
            diff = g ^ synced
            for bit in range(k):
                if (diff >> bit) & 1:
                    if (g >> bit) & 1:
                        for j in range(n):
                            lam[j] += rows[bit, j]
                    else:
                        for j in range(n):
                            lam[j] -= rows[bit, j]
            synced = g
            for j in range(n):
                buf[j] = lam[j]
            qsort(buf, n, sizeof(long), _cmp_long)
            same = True
            for j in range(n):
                if buf[j] != target_sorted[j]:
                    same = False
                    break
            if same:
                return g
        return -1
    finally:
        free(lam)
        free(buf)
