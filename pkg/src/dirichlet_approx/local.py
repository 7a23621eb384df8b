"""Local Dirichlet integrals D_zeta.

For ``zeta`` in the closed disk every polynomial splits as
``f(z) = a + (z - zeta) g(z)`` and ``D_zeta(f) = ||g||_{H^2}^2``.  The
quotient coefficients come from the backward recursion

    b_{deg-1} = a_deg,    b_{k-1} = a_k + zeta * b_k,    a = a_0 + zeta * b_0,

which never divides by ``zeta`` and so covers ``zeta = 0`` unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from ._backend import core
from .series import CoefficientSeries, as_disk_point, as_series, h2_norm_sq


@dataclass(frozen=True)
class LocalDecomposition:
    zeta: complex
    a: complex
    g: CoefficientSeries

    def recompose(self) -> CoefficientSeries:
        """Expand ``a + (z - zeta) g(z)`` back into coefficients."""
        b = self.g.coeffs
        c = np.zeros(b.shape[0] + 1, dtype=np.complex128)
        c[1:] += b
        c[:-1] -= self.zeta * b
        c[0] += self.a
        return CoefficientSeries(c)


def decompose(f, zeta) -> LocalDecomposition:
    f = as_series(f)
    zeta = as_disk_point(zeta)
    a, b = core.tail_coefficients(f.coeffs, zeta)
    return LocalDecomposition(zeta, a, CoefficientSeries(b))


def local_norm_sq(f, zeta) -> float:
    """D_zeta(f) for a polynomial (truncations are taken as stored)."""
    f = as_series(f)
    zeta = as_disk_point(zeta)
    return float(core.local_norms(f.coeffs, np.array([zeta]))[0])


def local_norm_sq_many(f, zetas, threads=None) -> np.ndarray:
    """D_zeta(f) over an array of points, evaluated independently per point."""
    f = as_series(f)
    zetas = np.asarray(zetas, dtype=np.complex128).ravel()
    if zetas.size and np.max(np.abs(zetas)) > 1.0 + 1e-12:
        raise ValueError("all points must lie in the closed unit disk")
    return _backend.local_norms(f.coeffs, zetas, threads=threads)


def lemma_poly_ratio(q, zeta) -> float:
    """``D_zeta(q) / (n^2 ||q||^2)`` for a polynomial of degree ``n >= 1``.

    The quotient coefficients ``d_k = sum_{j>k} c_j zeta^(j-k-1)`` have
    ``|d_k|^2 <= (n-k) ||q||^2`` by Cauchy-Schwarz, so the ratio is at
    most 1.
    """
    q = as_series(q)
    n = q.degree()
    if n == 0:
        if not np.any(q.coeffs):
            raise ValueError("lemma_poly_ratio is undefined for the zero polynomial")
        raise ValueError("lemma_poly_ratio needs degree >= 1")
    return local_norm_sq(q, zeta) / (n * n * h2_norm_sq(q))
