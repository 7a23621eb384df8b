"""Finite coefficient vectors standing for analytic functions on the disk.

A :class:`CoefficientSeries` is either an exact polynomial or the truncation
of a power series.  Every routine in the package treats a truncation as the
polynomial it stores; the only place truncation matters is the caller's
choice of ``N``.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._backend import core

DISK_TOL = 1e-12

FAMILIES = ("geometric", "inverse_square", "monomial", "tail_designed")


class Kind(enum.Enum):
    EXACT = "exact_polynomial"
    TRUNCATION = "truncation"


@dataclass(frozen=True, eq=False)
class CoefficientSeries:
    """Coefficients ``c_0..c_N`` of a polynomial or truncated power series.

    The coefficient array is stored read-only; arithmetic returns new
    series.  Trailing zeros are kept as given (use :meth:`trimmed`).
    """

    coeffs: np.ndarray
    kind: Kind = Kind.EXACT
    family_tag: str | None = None

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).ravel()
        if c.size == 0:
            raise ValueError("coefficient vector must be nonempty (use [0] for zero)")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __len__(self):
        return self.coeffs.shape[0]

    def __repr__(self):
        tag = f", family_tag={self.family_tag!r}" if self.family_tag else ""
        return f"CoefficientSeries(degree={self.degree()}, kind={self.kind.name}{tag})"

    def degree(self) -> int:
        nz = np.flatnonzero(self.coeffs)
        return int(nz[-1]) if nz.size else 0

    def trimmed(self) -> CoefficientSeries:
        return CoefficientSeries(self.coeffs[: self.degree() + 1], self.kind, self.family_tag)

    def padded(self, length: int) -> np.ndarray:
        """Coefficient array zero-padded (or cut) to ``length``."""
        out = np.zeros(length, dtype=np.complex128)
        m = min(length, len(self))
        out[:m] = self.coeffs[:m]
        return out

    def allclose(self, other, atol=1e-12) -> bool:
        other = as_series(other)
        n = max(len(self), len(other))
        return bool(np.all(np.abs(self.padded(n) - other.padded(n)) <= atol))

    def _combine(self, other, sign):
        other = as_series(other)
        n = max(len(self), len(other))
        kind = Kind.EXACT if self.kind is other.kind is Kind.EXACT else Kind.TRUNCATION
        return CoefficientSeries(self.padded(n) + sign * other.padded(n), kind)

    def __add__(self, other):
        return self._combine(other, 1.0)

    def __sub__(self, other):
        return self._combine(other, -1.0)

    def __neg__(self):
        return CoefficientSeries(-self.coeffs, self.kind)

    def __mul__(self, scalar):
        if isinstance(scalar, CoefficientSeries):
            return NotImplemented
        return CoefficientSeries(complex(scalar) * self.coeffs, self.kind)

    __rmul__ = __mul__

    def __call__(self, z):
        return evaluate(self, z)


def as_series(obj) -> CoefficientSeries:
    if isinstance(obj, CoefficientSeries):
        return obj
    return CoefficientSeries(np.atleast_1d(np.asarray(obj, dtype=np.complex128)))


def as_disk_point(z) -> complex:
    """Validate a point of the closed disk.

    Moduli in ``(1, 1 + 1e-12]`` are pulled back onto the unit circle.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"disk point must be finite, got {z!r}")
    r = abs(z)
    if r > 1.0 + DISK_TOL:
        raise ValueError(f"point {z!r} lies outside the closed unit disk")
    if r > 1.0:
        z = z / r
    return z


def evaluate(f, z):
    """Evaluate ``sum c_k z^k`` by Horner's rule; scalar or array ``z``."""
    f = as_series(f)
    if np.ndim(z) == 0:
        return complex(core.horner(f.coeffs, np.array([z], dtype=np.complex128))[0])
    return core.horner(f.coeffs, np.asarray(z, dtype=np.complex128))


def derivative(f) -> CoefficientSeries:
    f = as_series(f)
    if len(f) == 1:
        return CoefficientSeries([0.0], f.kind)
    k = np.arange(1, len(f))
    return CoefficientSeries(k * f.coeffs[1:], f.kind)


def h2_norm_sq(f) -> float:
    """``sum |c_k|^2`` in ascending k with compensated summation."""
    return float(core.h2_norm_sq(as_series(f).coeffs))


def make_family(name: str, params=(), N: int = 0) -> CoefficientSeries:
    """Truncated test function of length ``N + 1``.

    Families
    --------
    geometric (lam,)
        ``a_k = lam**k``, ``|lam| < 1``.
    inverse_square ()
        ``a_k = 1/(k+1)**2``.
    monomial (m,)
        ``z**m`` (requires ``m <= N``).
    tail_designed (t_0, t_1, ...)
        ``a_k = t_k - t_{k+1}``; missing tail entries are zero.
    """
    if N < 0:
        raise ValueError("truncation degree N must be >= 0")
    params = list(params)
    k = np.arange(N + 1)
    if name == "geometric":
        if len(params) != 1:
            raise ValueError("geometric takes one parameter lam")
        lam = complex(params[0])
        if abs(lam) >= 1:
            raise ValueError(f"geometric family needs |lam| < 1, got {lam!r}")
        c = lam ** k
        tag = f"geometric({params[0]!r})"
    elif name == "inverse_square":
        c = 1.0 / (k + 1.0) ** 2
        tag = "inverse_square"
    elif name == "monomial":
        if len(params) != 1:
            raise ValueError("monomial takes one parameter m")
        m = int(params[0])
        if not 0 <= m <= N:
            raise ValueError(f"monomial degree {m} outside 0..N={N}")
        c = np.zeros(N + 1, dtype=np.complex128)
        c[m] = 1.0
        tag = f"monomial({m})"
    elif name == "tail_designed":
        t = np.zeros(N + 2, dtype=np.complex128)
        m = min(len(params), N + 2)
        t[:m] = np.asarray(params[:m], dtype=np.complex128)
        c = t[:-1] - t[1:]
        tag = "tail_designed"
    else:
        raise ValueError(f"unknown family {name!r}; expected one of {FAMILIES}")
    return CoefficientSeries(c, Kind.TRUNCATION, tag)


def coefficients_to_json(f) -> str:
    f = as_series(f)
    return json.dumps([[float(c.real), float(c.imag)] for c in f.coeffs])


def coefficients_from_json(text: str, kind: Kind = Kind.EXACT) -> CoefficientSeries:
    """Parse a JSON array of ``[re, im]`` pairs (index = power of z)."""
    data = json.loads(text)
    if not isinstance(data, list) or not data:
        raise ValueError("coefficient file must hold a nonempty JSON array")
    out = []
    for i, pair in enumerate(data):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ValueError(f"entry {i} is not an [re, im] pair")
        re, im = pair
        if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair):
            raise ValueError(f"entry {i} is not numeric")
        re, im = float(re), float(im)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ValueError(f"entry {i} is not finite")
        out.append(complex(re, im))
    return CoefficientSeries(out, kind)


def load_coefficients(path, kind: Kind = Kind.EXACT) -> CoefficientSeries:
    return coefficients_from_json(Path(path).read_text(), kind)


def save_coefficients(f, path) -> None:
    Path(path).write_text(coefficients_to_json(f) + "\n")
