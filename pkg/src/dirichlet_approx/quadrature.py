"""Quadrature rules on the unit circle and disk, and a fixed-shape reduction.

Every disk rule returns ``(points, weights)`` for the *normalized* area
measure, so the weights of a rule sum to 1 up to quadrature error.
"""

from functools import lru_cache

import numpy as np

RING_RADII = (1e-6, 1e-4, 1e-2)


def pairwise_sum(values):
    """Sum by repeated halving; the tree depends only on ``len(values)``."""
    x = np.asarray(values, dtype=np.float64).ravel()
    if x.size == 0:
        return 0.0
    while x.size > 1:
        if x.size % 2:
            x = np.append(x, 0.0)
        x = x[0::2] + x[1::2]
    return float(x[0])


@lru_cache(maxsize=64)
def _leggauss(n):
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_legendre(n, a=0.0, b=1.0):
    """``n``-point Gauss-Legendre nodes and weights on ``[a, b]``."""
    if n < 1:
        raise ValueError("need at least one Gauss node")
    x, w = _leggauss(int(n))
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def circle_angles(n):
    return 2.0 * np.pi * np.arange(n) / n


def graded_radial_rule(n, ring_nodes=None, rings=RING_RADII):
    """Radial rule on ``[0, 1]`` with Gauss panels split at ``rings``.

    The outer panel ``[rings[-1], 1]`` carries ``n`` nodes, each inner panel
    ``ring_nodes`` (default ``max(8, n // 4)``).
    """
    ring_nodes = max(8, n // 4) if ring_nodes is None else ring_nodes
    edges = (0.0, *sorted(rings), 1.0)
    xs, ws = [], []
    for i, (lo, hi) in enumerate(zip(edges[:-1], edges[1:])):
        m = n if i == len(edges) - 2 else ring_nodes
        x, w = gauss_legendre(m, lo, hi)
        xs.append(x)
        ws.append(w)
    return np.concatenate(xs), np.concatenate(ws)


def polar_rule(nodes_r, nodes_theta, graded=False):
    """Gauss-Legendre in r times trapezoid in theta, normalized area."""
    if graded:
        r, wr = graded_radial_rule(nodes_r)
    else:
        r, wr = gauss_legendre(nodes_r)
    theta = circle_angles(nodes_theta)
    # dA = (1/pi) r dr dtheta and the trapezoid weight is 2 pi / n
    w = np.outer(2.0 * r * wr, np.full(nodes_theta, 1.0 / nodes_theta))
    z = np.outer(r, np.exp(1j * theta))
    return z.ravel(), w.ravel()


def mobius_rule(center, nodes_r, nodes_theta):
    """Polar rule pulled back through the disk automorphism swapping 0 and ``center``.

    With ``z = (c - w) / (1 - conj(c) w)`` the pseudo-hyperbolic distance
    from ``c`` becomes ``|w|``, so the graded rings of the radial rule sit
    around ``c`` and a ``log(1/|w|)`` singularity at ``c`` is resolved.
    """
    c = complex(center)
    if abs(c) >= 1:
        raise ValueError("mobius_rule needs an interior center")
    w_pts, w_wts = polar_rule(nodes_r, nodes_theta, graded=True)
    den = 1.0 - np.conj(c) * w_pts
    z = (c - w_pts) / den
    jac = ((1.0 - abs(c) ** 2) / np.abs(den) ** 2) ** 2
    return z, w_wts * jac


def boundary_rule(point, nodes_r, nodes_theta):
    """Rule adapted to a Poisson-kernel peak at a boundary ``point``.

    Local polar coordinates ``z = p (1 - rho e^{i psi})`` map the disk onto
    ``|psi| < pi/2, 0 < rho < 2 cos psi``; with ``rho = 2 u cos psi`` the
    normalized area element is ``(4/pi) u cos^2 psi du dpsi`` and
    ``P_p(z) = (1 - u) / u``.  Gauss-Legendre in both ``u`` and ``psi``.
    """
    p = complex(point)
    if abs(abs(p) - 1.0) > 1e-12:
        raise ValueError("boundary_rule needs a point on the unit circle")
    p = p / abs(p)
    u, wu = gauss_legendre(nodes_r)
    psi, wpsi = gauss_legendre(nodes_theta, -0.5 * np.pi, 0.5 * np.pi)
    cos_psi = np.cos(psi)
    rho = 2.0 * np.outer(u, cos_psi)
    z = p * (1.0 - rho * np.exp(1j * psi)[None, :])
    w = (4.0 / np.pi) * np.outer(u * wu, cos_psi ** 2 * wpsi)
    return z.ravel(), w.ravel()
