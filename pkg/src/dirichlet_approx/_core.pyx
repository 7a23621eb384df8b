# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: compensated H2 sums, the backward tail recursion
evaluated at many points, and batched Horner evaluation.

Complex products are written out in real arithmetic with the same operation
order as ``_core_py`` so both backends round identically.
"""

import numpy as np
from libc.math cimport fabs
from libc.stdlib cimport malloc, free


cdef inline void _neumaier_add(double* s, double* comp, double x) noexcept nogil:
    cdef double t = s[0] + x
    if fabs(s[0]) >= fabs(x):
        comp[0] += (s[0] - t) + x
    else:
        comp[0] += (x - t) + s[0]
    s[0] = t


def h2_norm_sq(coeffs):
    cdef const double complex[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef Py_ssize_t k, n = c.shape[0]
    cdef double s = 0.0, comp = 0.0, re, im
    with nogil:
        for k in range(n):
            re = c[k].real
            im = c[k].imag
            _neumaier_add(&s, &comp, re * re + im * im)
    return s + comp


def tail_coefficients(coeffs, zeta):
    cdef const double complex[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef double complex z = zeta
    cdef Py_ssize_t k, d = c.shape[0] - 1
    cdef double zr = z.real, zi = z.imag, br = 0.0, bi = 0.0, pr, pi
    if d == 0:
        return complex(c[0]), np.zeros(1, dtype=np.complex128)
    out = np.empty(d, dtype=np.complex128)
    cdef double complex[::1] b = out
    with nogil:
        for k in range(d, 0, -1):
            pr = zr * br - zi * bi
            pi = zr * bi + zi * br
            br = c[k].real + pr
            bi = c[k].imag + pi
            b[k - 1].real = br
            b[k - 1].imag = bi
        pr = zr * br - zi * bi
        pi = zr * bi + zi * br
    return complex(c[0].real + pr, c[0].imag + pi), out


def local_norms(coeffs, zetas):
    cdef const double complex[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const double complex[::1] zs = np.ascontiguousarray(zetas, dtype=np.complex128).ravel()
    cdef Py_ssize_t m = zs.shape[0], d = c.shape[0] - 1, j, k
    out = np.zeros(m, dtype=np.float64)
    cdef double[::1] res = out
    cdef double zr, zi, br, bi, pr, pi, s, comp
    cdef double* sq
    if d == 0 or m == 0:
        return out
    sq = <double*> malloc(d * sizeof(double))
    if sq == NULL:
        raise MemoryError()
    try:
        with nogil:
            for j in range(m):
                zr = zs[j].real
                zi = zs[j].imag
                br = 0.0
                bi = 0.0
                for k in range(d, 0, -1):
                    pr = zr * br - zi * bi
                    pi = zr * bi + zi * br
                    br = c[k].real + pr
                    bi = c[k].imag + pi
                    sq[k - 1] = br * br + bi * bi
                s = 0.0
                comp = 0.0
                for k in range(d):
                    _neumaier_add(&s, &comp, sq[k])
                res[j] = s + comp
    finally:
        free(sq)
    return out


def horner(coeffs, points):
    cdef const double complex[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    z_arr = np.ascontiguousarray(points, dtype=np.complex128)
    shape = z_arr.shape
    cdef const double complex[::1] z = z_arr.ravel()
    cdef Py_ssize_t m = z.shape[0], n = c.shape[0], j, k
    out = np.empty(m, dtype=np.complex128)
    cdef double complex[::1] res = out
    cdef double zr, zi, pr, pi, tr, ti
    with nogil:
        for j in range(m):
            zr = z[j].real
            zi = z[j].imag
            pr = c[n - 1].real
            pi = c[n - 1].imag
            for k in range(n - 2, -1, -1):
                tr = pr * zr - pi * zi
                ti = pr * zi + pi * zr
                pr = tr + c[k].real
                pi = ti + c[k].imag
            res[j].real = pr
            res[j].imag = pi
    return out.reshape(shape)
