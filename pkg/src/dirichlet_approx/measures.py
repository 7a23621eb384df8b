"""Finite positive measures on the closed disk and the integrated norm D_mu.

Each measure discretizes to weighted nodes; ``D_mu(f)`` is the weighted sum
of the local integrals ``D_zeta(f)`` at those nodes, reduced with a
fixed-shape pairwise tree.

Conventions
-----------
* Circle densities are taken with respect to normalized arclength
  ``dtheta / 2pi``: the density ``1`` is the probability measure on T.
* Disk densities are taken with respect to normalized area
  ``dA = r dr dtheta / pi``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .local import local_norm_sq_many
from .quadrature import circle_angles, gauss_legendre, pairwise_sum
from .series import as_disk_point, as_series


class DiskMeasure:
    """Base class; subclasses provide :meth:`nodes`."""

    measure_id = "mu"

    def nodes(self):
        """Return ``(points, weights)`` discretizing the measure."""
        raise NotImplementedError

    @property
    def total_mass(self) -> float:
        return pairwise_sum(self.nodes()[1])

    def __add__(self, other):
        if not isinstance(other, DiskMeasure):
            return NotImplemented
        if isinstance(self, AtomicMeasure) and isinstance(other, AtomicMeasure):
            return AtomicMeasure(self.atoms + other.atoms)
        return MeasureSum(_parts(self) + _parts(other))

    def scaled(self, c: float) -> DiskMeasure:
        raise NotImplementedError

    def __rmul__(self, c):
        return self.scaled(c)


def _parts(mu):
    return mu.parts if isinstance(mu, MeasureSum) else (mu,)


def _check_scale(c):
    c = float(c)
    if not (np.isfinite(c) and c > 0):
        raise ValueError("measures can only be scaled by a positive finite factor")
    return c


@dataclass(frozen=True)
class AtomicMeasure(DiskMeasure):
    """Finite sum of point masses ``sum m_j delta_{zeta_j}``."""

    atoms: tuple = ()
    measure_id: str = "atomic"

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("an atomic measure needs at least one atom")
        clean = []
        for point, mass in self.atoms:
            mass = float(mass)
            if not (np.isfinite(mass) and mass > 0):
                raise ValueError(f"atom mass must be positive and finite, got {mass!r}")
            clean.append((as_disk_point(point), mass))
        object.__setattr__(self, "atoms", tuple(clean))

    def nodes(self):
        pts = np.array([p for p, _ in self.atoms], dtype=np.complex128)
        wts = np.array([m for _, m in self.atoms], dtype=np.float64)
        return pts, wts

    def scaled(self, c):
        c = _check_scale(c)
        return AtomicMeasure(tuple((p, c * m) for p, m in self.atoms), self.measure_id)


def dirac(point, mass=1.0, measure_id=None) -> AtomicMeasure:
    point = as_disk_point(point)
    return AtomicMeasure(((point, mass),), measure_id or f"delta({point:g})")


def _sample_density(density, shape, args, what):
    if density is None:
        values = np.ones(shape)
    elif callable(density):
        values = np.asarray(density(*args), dtype=np.float64)
        values = np.broadcast_to(values, shape).copy()
    else:
        values = np.asarray(density, dtype=np.float64)
        if values.shape != shape:
            raise ValueError(f"{what} table has shape {values.shape}, expected {shape}")
    if not np.all(np.isfinite(values)) or np.any(values < 0):
        raise ValueError(f"{what} values must be finite and nonnegative")
    if not np.any(values > 0):
        raise ValueError(f"{what} must have positive total mass")
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class CircleMeasure(DiskMeasure):
    """``h(theta) dtheta/2pi`` on T, integrated by the trapezoid rule.

    ``density`` is a callable of the angle, a table of values at the nodes
    ``2 pi j / node_count``, or ``None`` for the uniform probability measure.
    """

    density: object = None
    node_count: int = 256
    measure_id: str = "circle"

    def __post_init__(self):
        if self.node_count < 8 or self.node_count % 2:
            raise ValueError("node_count must be an even integer >= 8")
        self.values  # validate eagerly

    @cached_property
    def angles(self):
        return circle_angles(self.node_count)

    @cached_property
    def values(self):
        return _sample_density(self.density, (self.node_count,), (self.angles,), "circle density")

    def nodes(self):
        return np.exp(1j * self.angles), self.values / self.node_count

    def scaled(self, c):
        c = _check_scale(c)
        return CircleMeasure(c * self.values, self.node_count, self.measure_id)

    def fourier_coefficients(self):
        """DFT coefficients ``h_m`` for ``m = 0..node_count/2`` of the node values."""
        return np.fft.rfft(self.values) / self.node_count


def uniform_circle(node_count=256) -> CircleMeasure:
    return CircleMeasure(None, node_count, f"uniform_T({node_count})")


@dataclass(frozen=True, eq=False)
class DiskDensityMeasure(DiskMeasure):
    """``h(r, theta) dA`` on the open disk.

    Gauss-Legendre in ``r`` on ``[0, 1]`` times the trapezoid rule in
    ``theta``.  Tables are indexed ``[radial, angular]`` at those nodes.
    """

    density: object = None
    radial_nodes: int = 64
    angular_nodes: int = 256
    measure_id: str = "disk"

    def __post_init__(self):
        if self.radial_nodes < 4 or self.angular_nodes < 8:
            raise ValueError("disk density needs radial_nodes >= 4 and angular_nodes >= 8")
        self.values

    @cached_property
    def grid(self):
        r, wr = gauss_legendre(self.radial_nodes)
        return r, wr, circle_angles(self.angular_nodes)

    @cached_property
    def values(self):
        r, _, theta = self.grid
        shape = (self.radial_nodes, self.angular_nodes)
        R, T = np.meshgrid(r, theta, indexing="ij")
        return _sample_density(self.density, shape, (R, T), "disk density")

    def nodes(self):
        r, wr, theta = self.grid
        pts = np.outer(r, np.exp(1j * theta))
        wts = np.outer(2.0 * r * wr, np.full(self.angular_nodes, 1.0 / self.angular_nodes))
        return pts.ravel(), (wts * self.values).ravel()

    def scaled(self, c):
        c = _check_scale(c)
        return DiskDensityMeasure(
            c * self.values, self.radial_nodes, self.angular_nodes, self.measure_id
        )


@dataclass(frozen=True, eq=False)
class MeasureSum(DiskMeasure):
    parts: tuple = field(default_factory=tuple)
    measure_id: str = "sum"

    def __post_init__(self):
        if not self.parts:
            raise ValueError("empty measure sum")

    def nodes(self):
        pts, wts = zip(*(p.nodes() for p in self.parts))
        return np.concatenate(pts), np.concatenate(wts)

    def scaled(self, c):
        return MeasureSum(tuple(p.scaled(c) for p in self.parts), self.measure_id)


def dirichlet_mu(f, mu: DiskMeasure, threads=None) -> float:
    """``D_mu(f) = integral of D_zeta(f) dmu(zeta)``."""
    f = as_series(f)
    pts, wts = mu.nodes()
    return pairwise_sum(wts * local_norm_sq_many(f, pts, threads=threads))


def dmu_norm_sq(f, mu: DiskMeasure, threads=None) -> float:
    """``|f(0)|^2 + D_mu(f)``."""
    f = as_series(f)
    return abs(f.coeffs[0]) ** 2 + dirichlet_mu(f, mu, threads=threads)


def measure_from_config(spec: dict) -> DiskMeasure:
    """Build a measure from its JSON description.

    ``{"type": "atomic", "atoms": [{"re", "im", "mass"}]}``,
    ``{"type": "circle", "nodes": 256, "density_table": [...]}`` or
    ``{"type": "disk", "nodes_r": 64, "nodes_theta": 256, "density_table": [[...]]}``;
    ``"parts": [...]`` sums several descriptions.  An optional ``"id"``
    names the measure in output files.
    """
    if not isinstance(spec, dict):
        raise ValueError("measure description must be a JSON object")
    kind = spec.get("type")
    mid = spec.get("id")
    if kind == "atomic":
        atoms = spec.get("atoms")
        if not isinstance(atoms, list) or not atoms:
            raise ValueError("atomic measure needs a nonempty 'atoms' list")
        pairs = []
        for atom in atoms:
            pairs.append((complex(float(atom.get("re", 0.0)), float(atom.get("im", 0.0))),
                          float(atom.get("mass", 1.0))))
        return AtomicMeasure(tuple(pairs), mid or "atomic")
    if kind == "circle":
        table = spec.get("density_table")
        n = int(spec.get("nodes", len(table) if table is not None else 256))
        return CircleMeasure(table, n, mid or f"circle({n})")
    if kind == "disk":
        table = spec.get("density_table")
        nr = int(spec.get("nodes_r", 64))
        nt = int(spec.get("nodes_theta", 256))
        return DiskDensityMeasure(table, nr, nt, mid or f"disk({nr}x{nt})")
    if kind == "sum":
        parts = tuple(measure_from_config(p) for p in spec.get("parts", []))
        return MeasureSum(parts, mid or "sum")
    raise ValueError(f"unknown measure type {kind!r}")
