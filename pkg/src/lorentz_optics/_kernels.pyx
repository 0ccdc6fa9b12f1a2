# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels for 2x2 matrix powers.

Each routine loops over a batch of independent 2x2 matrices and raises them
to an integer power by repeated squaring, entirely in C.  Semantics match
``_kernels_py`` exactly.
"""

import numpy as np

from libc.math cimport cosh, sinh, cos, sin


ctypedef double complex cplx


cdef inline void cmul(cplx* a, cplx* b, cplx* out) noexcept nogil:
    cdef cplx o0 = a[0] * b[0] + a[1] * b[2]
    cdef cplx o1 = a[0] * b[1] + a[1] * b[3]
    cdef cplx o2 = a[2] * b[0] + a[3] * b[2]
    cdef cplx o3 = a[2] * b[1] + a[3] * b[3]
    out[0] = o0
    out[1] = o1
    out[2] = o2
    out[3] = o3


cdef inline void rmul(double* a, double* b, double* out) noexcept nogil:
    cdef double o0 = a[0] * b[0] + a[1] * b[2]
    cdef double o1 = a[0] * b[1] + a[1] * b[3]
    cdef double o2 = a[2] * b[0] + a[3] * b[2]
    cdef double o3 = a[2] * b[1] + a[3] * b[3]
    out[0] = o0
    out[1] = o1
    out[2] = o2
    out[3] = o3


cdef inline void cpow(cplx* m, long n, cplx* out) noexcept nogil:
    cdef cplx base[4]
    base[0] = m[0]
    base[1] = m[1]
    base[2] = m[2]
    base[3] = m[3]
    out[0] = 1.0
    out[1] = 0.0
    out[2] = 0.0
    out[3] = 1.0
    while n:
        if n & 1:
            cmul(out, base, out)
        n >>= 1
        if n:
            cmul(base, base, base)


cdef inline void rpow(double* m, long n, double* out) noexcept nogil:
    cdef double base[4]
    base[0] = m[0]
    base[1] = m[1]
    base[2] = m[2]
    base[3] = m[3]
    out[0] = 1.0
    out[1] = 0.0
    out[2] = 0.0
    out[3] = 1.0
    while n:
        if n & 1:
            rmul(out, base, out)
        n >>= 1
        if n:
            rmul(base, base, base)


def matpow(mats, long n):
    if n < 0:
        raise ValueError("power must be non-negative")
    cdef cplx[:, :, ::1] src = np.ascontiguousarray(mats, dtype=complex)
    out = np.empty((src.shape[0], 2, 2), dtype=complex)
    cdef cplx[:, :, ::1] dst = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(src.shape[0]):
            cpow(&src[i, 0, 0], n, &dst[i, 0, 0])
    return out


def core_power(xs, long n):
    if n < 0:
        raise ValueError("power must be non-negative")
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=float).ravel()
    out = np.empty((x.shape[0], 2, 2), dtype=float)
    cdef double[:, :, ::1] dst = out
    cdef double m[4]
    cdef Py_ssize_t i
    with nogil:
        for i in range(x.shape[0]):
            m[0] = x[i] - 1.0
            m[1] = x[i] - 2.0
            m[2] = x[i]
            m[3] = x[i] - 1.0
            rpow(m, n, &dst[i, 0, 0])
    return out


def layer_power(double eta, phi1, phi2, long n):
    if n < 0:
        raise ValueError("power must be non-negative")
    a1 = np.ascontiguousarray(phi1, dtype=float)
    a2 = np.ascontiguousarray(phi2, dtype=float)
    if a1.shape != a2.shape:
        raise ValueError("phi1 and phi2 must have the same shape")
    cdef double[::1] p1 = a1.ravel()
    cdef double[::1] p2 = a2.ravel()
    out = np.empty((p1.shape[0], 2, 2), dtype=complex)
    cdef cplx[:, :, ::1] dst = out
    cdef double ch = cosh(0.5 * eta)
    cdef double sh = sinh(0.5 * eta)
    cdef cplx w[4]
    cdef cplx e1, f1, e2, f2
    cdef Py_ssize_t i
    with nogil:
        for i in range(p1.shape[0]):
            # phase factors exp(-i phi/2) and exp(+i phi/2)
            e1 = cos(0.5 * p1[i]) - 1j * sin(0.5 * p1[i])
            f1 = cos(0.5 * p1[i]) + 1j * sin(0.5 * p1[i])
            e2 = cos(0.5 * p2[i]) - 1j * sin(0.5 * p2[i])
            f2 = cos(0.5 * p2[i]) + 1j * sin(0.5 * p2[i])
            # X(eta) P(phi1) X(-eta), then times P(phi2) on the right
            w[0] = (ch * ch * e1 - sh * sh * f1) * e2
            w[1] = (-ch * sh * e1 + sh * ch * f1) * f2
            w[2] = (sh * ch * e1 - ch * sh * f1) * e2
            w[3] = (-sh * sh * e1 + ch * ch * f1) * f2
            cpow(w, n, &dst[i, 0, 0])
    return out
