"""Pure numpy implementation of the hot kernels.

Mirrors ``_core.pyx`` operation for operation (same summation order, same
complex product formula) so the two backends agree to the last few ulps.
"""

import numpy as np

_CHUNK = 512


def _neumaier(terms):
    """Compensated sum of ``terms`` along axis 0, ascending index order."""
    terms = np.asarray(terms, dtype=np.float64)
    s = np.zeros(terms.shape[1:], dtype=np.float64)
    comp = np.zeros_like(s)
    for x in terms:
        t = s + x
        big = np.abs(s) >= np.abs(x)
        comp += np.where(big, (s - t) + x, (x - t) + s)
        s = t
    return s + comp


def h2_norm_sq(coeffs):
    c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    s = 0.0
    comp = 0.0
    for v in c:
        x = v.real * v.real + v.imag * v.imag
        t = s + x
        if abs(s) >= abs(x):
            comp += (s - t) + x
        else:
            comp += (x - t) + s
        s = t
    return s + comp


def tail_coefficients(coeffs, zeta):
    """Return ``(a, b)`` with ``f = a + (z - zeta) * sum(b_k z^k)``."""
    c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    zeta = complex(zeta)
    d = c.shape[0] - 1
    if d == 0:
        return complex(c[0]), np.zeros(1, dtype=np.complex128)
    b = np.empty(d, dtype=np.complex128)
    zr, zi = zeta.real, zeta.imag
    br, bi = 0.0, 0.0
    for k in range(d, 0, -1):
        # b_{k-1} = a_k + zeta * b_k
        pr = zr * br - zi * bi
        pi = zr * bi + zi * br
        br = c[k].real + pr
        bi = c[k].imag + pi
        b[k - 1] = complex(br, bi)
    pr = zr * br - zi * bi
    pi = zr * bi + zi * br
    a = complex(c[0].real + pr, c[0].imag + pi)
    return a, b


def local_norms(coeffs, zetas):
    c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    zetas = np.ascontiguousarray(zetas, dtype=np.complex128).ravel()
    out = np.zeros(zetas.shape[0], dtype=np.float64)
    d = c.shape[0] - 1
    if d == 0:
        return out
    for start in range(0, zetas.shape[0], _CHUNK):
        z = zetas[start:start + _CHUNK]
        zr, zi = z.real, z.imag
        sq = np.empty((d, z.shape[0]), dtype=np.float64)
        br = np.zeros(z.shape[0])
        bi = np.zeros(z.shape[0])
        for k in range(d, 0, -1):
            pr = zr * br - zi * bi
            pi = zr * bi + zi * br
            br = c[k].real + pr
            bi = c[k].imag + pi
            sq[k - 1] = br * br + bi * bi
        out[start:start + z.shape[0]] = _neumaier(sq)
    return out


def horner(coeffs, points):
    c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    z = np.ascontiguousarray(points, dtype=np.complex128)
    shape = z.shape
    z = z.ravel()
    zr, zi = z.real, z.imag
    pr = np.full(z.shape[0], c[-1].real)
    pi = np.full(z.shape[0], c[-1].imag)
    for k in range(c.shape[0] - 2, -1, -1):
        tr = pr * zr - pi * zi
        ti = pr * zi + pi * zr
        pr = tr + c[k].real
        pi = ti + c[k].imag
    out = np.empty(z.shape[0], dtype=np.complex128)
    out.real = pr
    out.imag = pi
    return out.reshape(shape)
