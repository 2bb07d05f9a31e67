# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled distance kernels: Hausdorff and point-to-set minima.

Bit-identical to setfix._purekern (same accumulation order; compiled with
fp-contract off so no FMA fusion changes the rounding).
"""

from libc.math cimport sqrt

IMPLEMENTATION = "cython"


def point_set_matrix(const double[:, ::1] dist, Py_ssize_t x, Py_ssize_t[::1] a):
    cdef Py_ssize_t k
    cdef double v, best = dist[x, a[0]]
    for k in range(1, a.shape[0]):
        v = dist[x, a[k]]
        if v < best:
            best = v
    return best


def hausdorff_matrix(const double[:, ::1] dist, Py_ssize_t[::1] a, Py_ssize_t[::1] b):
    cdef Py_ssize_t i, j, k
    cdef double v, best, h = 0.0
    for i in range(a.shape[0]):
        best = dist[a[i], b[0]]
        for k in range(1, b.shape[0]):
            v = dist[a[i], b[k]]
            if v < best:
                best = v
        if best > h:
            h = best
    for j in range(b.shape[0]):
        best = dist[b[j], a[0]]
        for k in range(1, a.shape[0]):
            v = dist[b[j], a[k]]
            if v < best:
                best = v
        if best > h:
            h = best
    return h


cdef inline double _eucl(const double* x, const double* y, Py_ssize_t dim) nogil:
    cdef Py_ssize_t c
    cdef double d, s = 0.0
    for c in range(dim):
        d = x[c] - y[c]
        s += d * d
    return sqrt(s)


def point_set_euclidean(double[::1] x, double[:, ::1] pts):
    cdef Py_ssize_t k, dim = x.shape[0]
    cdef double v, best = _eucl(&x[0], &pts[0, 0], dim)
    for k in range(1, pts.shape[0]):
        v = _eucl(&x[0], &pts[k, 0], dim)
        if v < best:
            best = v
    return best


def hausdorff_euclidean(double[:, ::1] a, double[:, ::1] b):
    cdef Py_ssize_t i, j, k, dim = a.shape[1]
    cdef double v, best, h = 0.0
    for i in range(a.shape[0]):
        best = _eucl(&a[i, 0], &b[0, 0], dim)
        for k in range(1, b.shape[0]):
            v = _eucl(&a[i, 0], &b[k, 0], dim)
            if v < best:
                best = v
        if best > h:
            h = best
    for j in range(b.shape[0]):
        best = _eucl(&b[j, 0], &a[0, 0], dim)
        for k in range(1, a.shape[0]):
            v = _eucl(&b[j, 0], &a[k, 0], dim)
            if v < best:
                best = v
        if best > h:
            h = best
    return h
