"""Superharmonic weights and the weighted area Dirichlet integral.

A finite positive measure ``mu`` on the closed disk defines

    omega(z) = int_D log|(1 - conj(s) z)/(s - z)| 2/(1 - |s|^2) dmu(s)
             + int_T (1 - |z|^2)/|s - z|^2 dmu(s),

and ``int_D |f'|^2 omega dA`` should equal ``D_mu(f)``.  Because the
integral is linear in ``mu``, :func:`area_dirichlet` integrates each piece
of ``omega`` on a rule adapted to that piece:

* interior atom ``s``: polar rule pulled back through the automorphism
  taking 0 to ``s`` (the log singularity moves to the origin, graded rings);
* boundary atom: a chart in which Poisson kernel times area element is a
  polynomial;
* circle density: its harmonic extension (a polynomial in ``z`` from the
  DFT of the node values) on the plain polar rule;
* disk density: discretized log kernel on the polar rule (approximate,
  flagged by :func:`identity_check`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import quadrature as quad
from .measures import (
    AtomicMeasure,
    CircleMeasure,
    DiskDensityMeasure,
    DiskMeasure,
    MeasureSum,
    dirichlet_mu,
)
from .series import CoefficientSeries, as_series, derivative, evaluate

NEAR_BOUNDARY = 0.8
_BOUNDARY_TOL = 1e-12


class SingularEvaluationError(ValueError):
    """omega is infinite at an interior atom."""


class NonFiniteWeightError(ArithmeticError):
    """A weight produced a non-finite value at a quadrature node."""

    def __init__(self, node, value):
        self.node = complex(node)
        self.value = value
        super().__init__(
            f"weight is {value!r} at quadrature node z = {self.node.real:.17g}"
            f"{self.node.imag:+.17g}j"
        )


def _atom_kind(s):
    return "boundary" if abs(abs(s) - 1.0) <= _BOUNDARY_TOL else "interior"


def log_kernel(s, z):
    """``2/(1-|s|^2) log|(1 - conj(s) z)/(s - z)|`` for interior ``s``."""
    s = complex(s)
    z = np.asarray(z, dtype=np.complex128)
    with np.errstate(divide="ignore"):
        return (2.0 / (1.0 - abs(s) ** 2)) * (
            np.log(np.abs(1.0 - np.conj(s) * z)) - np.log(np.abs(s - z))
        )


def poisson_kernel(s, z):
    z = np.asarray(z, dtype=np.complex128)
    return (1.0 - np.abs(z) ** 2) / np.abs(complex(s) - z) ** 2


def _circle_polynomial(mu: CircleMeasure) -> CoefficientSeries:
    """Coefficients ``c_m`` with ``Re sum c_m z^m`` the Poisson integral of the
    trigonometric interpolant of the node values."""
    h = mu.fourier_coefficients()
    n = mu.node_count
    c = 2.0 * h
    c[0] = h[0]
    c[n // 2] = h[n // 2]
    return CoefficientSeries(c)


@dataclass(frozen=True)
class _Piece:
    weight: object  # callable z -> omega piece
    rule: str  # 'mobius', 'boundary', 'polar'
    center: complex = 0j


@dataclass(frozen=True, eq=False)
class SuperharmonicWeight:
    """The weight ``omega`` generated by a representing measure."""

    mu: DiskMeasure
    pieces: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(_pieces(self.mu)))

    def __call__(self, z):
        return omega_eval(self, z)

    @property
    def interior_atoms(self):
        return [p.center for p in self.pieces if p.rule == "mobius"]

    @property
    def has_disk_density(self):
        return any(isinstance(p, DiskDensityMeasure) for p in _flatten(self.mu))


def _flatten(mu):
    return mu.parts if isinstance(mu, MeasureSum) else (mu,)


def _pieces(mu):
    for part in _flatten(mu):
        if isinstance(part, AtomicMeasure):
            for s, m in part.atoms:
                if _atom_kind(s) == "interior":
                    yield _Piece(lambda z, s=s, m=m: m * log_kernel(s, z), "mobius", s)
                else:
                    s = s / abs(s)
                    yield _Piece(lambda z, s=s, m=m: m * poisson_kernel(s, z), "boundary", s)
        elif isinstance(part, CircleMeasure):
            poly = _circle_polynomial(part)
            yield _Piece(lambda z, poly=poly: evaluate(poly, np.asarray(z)).real, "polar")
        elif isinstance(part, DiskDensityMeasure):
            pts, wts = part.nodes()

            def disk_piece(z, pts=pts, wts=wts):
                z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
                out = np.zeros(z.shape)
                for start in range(0, z.size, 256):
                    zz = z.ravel()[start:start + 256, None]
                    k = (2.0 / (1.0 - np.abs(pts) ** 2)) * np.log(
                        np.abs(1.0 - np.conj(pts) * zz) / np.abs(pts - zz)
                    )
                    out.ravel()[start:start + 256] = k @ wts
                return out

            yield _Piece(disk_piece, "polar")
        else:
            raise TypeError(f"unsupported measure type {type(part).__name__}")


@dataclass(frozen=True)
class PowerWeight:
    """``(1 - |z|^2)^(1 - alpha)`` for ``0 <= alpha <= 1``."""

    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("power weight needs 0 <= alpha <= 1")

    def __call__(self, z):
        return (1.0 - np.abs(np.asarray(z)) ** 2) ** (1.0 - self.alpha)


def omega_eval(w: SuperharmonicWeight, z):
    """omega at ``z`` (scalar or array), ``|z| < 1``."""
    if isinstance(w, DiskMeasure):
        w = SuperharmonicWeight(w)
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    if np.any(np.abs(z) >= 1.0):
        raise ValueError("omega is evaluated on the open disk only")
    for s in w.interior_atoms:
        if np.any(z == s):
            raise SingularEvaluationError(f"omega is infinite at the interior atom {s!r}")
    total = np.zeros(z.shape)
    for piece in w.pieces:
        total = total + piece.weight(z)
    return float(total[0]) if scalar else total


def _rule(piece_rule, center, nodes_r, nodes_theta):
    if piece_rule == "mobius":
        return quad.mobius_rule(center, nodes_r, nodes_theta)
    if piece_rule == "boundary":
        return quad.boundary_rule(center, nodes_r, nodes_theta)
    return quad.polar_rule(nodes_r, nodes_theta)


def _integrate(fp, weight, pts, wts):
    values = np.asarray(weight(pts), dtype=np.float64)
    values = np.broadcast_to(values, pts.shape)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        i = int(bad[0])
        raise NonFiniteWeightError(pts[i], float(values[i]))
    d = evaluate(fp, pts)
    return quad.pairwise_sum((d.real ** 2 + d.imag ** 2) * values * wts)


def area_dirichlet(f, weight, nodes_r=64, nodes_theta=256, rule="polar", center=0j) -> float:
    """``int_D |f'(z)|^2 weight(z) dA(z)`` with normalized area ``dA``.

    ``weight`` is a callable on arrays of points or a
    :class:`SuperharmonicWeight`; for the latter each piece of omega is
    integrated on its own adapted rule and ``rule``/``center`` are ignored.
    Otherwise ``rule`` is 'polar' (Gauss-Legendre x trapezoid), 'mobius'
    (graded rings around the interior point ``center``) or 'boundary'
    (Poisson chart at the unit-modulus ``center``).
    """
    fp = derivative(as_series(f))
    if isinstance(weight, DiskMeasure):
        weight = SuperharmonicWeight(weight)
    if isinstance(weight, SuperharmonicWeight):
        total = [
            _integrate(fp, p.weight, *_rule(p.rule, p.center, nodes_r, nodes_theta))
            for p in weight.pieces
        ]
        return float(sum(total))
    pts, wts = _rule(rule, center, nodes_r, nodes_theta)
    return _integrate(fp, weight, pts, wts)


@dataclass(frozen=True)
class IdentityReport:
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    nodes_r: int
    nodes_theta: int
    warning: bool
    measure_id: str = ""


def identity_check(f, mu: DiskMeasure, nodes_r=64, nodes_theta=256) -> IdentityReport:
    """Compare ``int |f'|^2 omega dA`` (lhs) with ``D_mu(f)`` (rhs).

    ``warning`` is set when an interior atom has modulus above 0.8 or the
    measure has a disk-density part; the accuracy contract does not cover
    those cases.
    """
    w = SuperharmonicWeight(mu)
    lhs = area_dirichlet(f, w, nodes_r, nodes_theta)
    rhs = dirichlet_mu(f, mu)
    abs_err = abs(lhs - rhs)
    if rhs != 0:
        rel_err = abs_err / abs(rhs)
    else:
        rel_err = 0.0 if abs_err == 0 else float("inf")
    warning = w.has_disk_density or any(abs(s) > NEAR_BOUNDARY for s in w.interior_atoms)
    return IdentityReport(lhs, rhs, abs_err, rel_err, nodes_r, nodes_theta, warning,
                          getattr(mu, "measure_id", ""))


@dataclass(frozen=True)
class PowerComparison:
    alpha: float
    integral: float
    coeff_sum: float
    ratio: float


def power_weight_comparison(f, alpha, nodes_r=64, nodes_theta=256) -> PowerComparison:
    """Weighted area integral against ``sum k^alpha |a_k|^2``."""
    f = as_series(f)
    k = np.arange(1, len(f))
    a = f.coeffs[1:]
    coeff_sum = float(np.sum(k ** float(alpha) * (a.real ** 2 + a.imag ** 2)))
    if coeff_sum == 0:
        raise ValueError("ratio is undefined for a constant function")
    integral = area_dirichlet(f, PowerWeight(float(alpha)), nodes_r, nodes_theta)
    return PowerComparison(float(alpha), integral, coeff_sum, integral / coeff_sum)
