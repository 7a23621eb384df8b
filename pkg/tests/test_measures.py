import numpy as np
import pytest

from dirichlet_approx.config import ConfigError, parse_config
from dirichlet_approx.measures import (
    AtomicMeasure,
    CircleMeasure,
    DiskDensityMeasure,
    MeasureSum,
    dirac,
    dirichlet_mu,
    dmu_norm_sq,
    measure_from_config,
    uniform_circle,
)
from dirichlet_approx.local import local_norm_sq

from conftest import random_disk_point, random_poly


def random_atomic(rng, count):
    return AtomicMeasure(tuple((random_disk_point(rng), float(rng.uniform(0.1, 2))) for _ in range(count)))


class TestDirichletMu:
    def test_delta_zero(self):
        assert dirichlet_mu([5, 3, 4], dirac(0)) == 25

    def test_two_boundary_atoms(self):
        mu = AtomicMeasure(((1, 0.5), (-1, 0.5)))
        assert dirichlet_mu([0, 0, 1], mu) == pytest.approx(2, abs=1e-15)

    def test_uniform_circle_square(self):
        assert dirichlet_mu([0, 0, 1], uniform_circle(256)) == pytest.approx(2, abs=1e-9)

    def test_classical_dirichlet(self, rng):
        for deg in range(0, 31):
            a = random_poly(rng, deg)
            k = np.arange(deg + 1)
            expected = float(np.sum(k * np.abs(a) ** 2))
            assert abs(dirichlet_mu(a, uniform_circle()) - expected) <= 1e-8 * max(1, expected)

    def test_circle_density_matches_atomic_sum(self):
        h = lambda t: 1 + np.cos(t)
        mu = CircleMeasure(h, 64)
        pts, wts = mu.nodes()
        atoms = AtomicMeasure(tuple((p, w) for p, w in zip(pts, wts) if w > 0))
        f = [1, 2, -1j, 0.5]
        assert dirichlet_mu(f, mu) == pytest.approx(dirichlet_mu(f, atoms), rel=1e-13)

    def test_circle_density_closed_form(self):
        # D_zeta(z^2) = |zeta + z|^2 coefficients: g = [zeta, 1], constant 2 on T
        assert dirichlet_mu([0, 0, 1], CircleMeasure(lambda t: 1 + np.cos(3 * t), 32)) == pytest.approx(2, abs=1e-13)

    def test_disk_density_uniform_area(self):
        # int D_zeta(z) dA = 1; D_zeta(z^2) = 1 + |zeta|^2 integrates to 3/2
        mu = DiskDensityMeasure(None, 16, 32)
        assert mu.total_mass == pytest.approx(1, abs=1e-13)
        assert dirichlet_mu([0, 1], mu) == pytest.approx(1, abs=1e-13)
        assert dirichlet_mu([0, 0, 1], mu) == pytest.approx(1.5, abs=1e-13)


class TestNormSq:
    def test_constant(self, rng):
        for mu in (dirac(0), uniform_circle(), random_atomic(rng, 3)):
            assert dmu_norm_sq([3], mu) == 9

    def test_z_at_one(self):
        assert dmu_norm_sq([0, 1], dirac(1)) == 1

    def test_scaled_dirac(self):
        assert dmu_norm_sq([1, 1], dirac(0, 2.0)) == 3


class TestLinearity:
    def test_additivity(self, rng):
        for _ in range(50):
            m1, m2 = random_atomic(rng, 3), random_atomic(rng, 2)
            f = random_poly(rng, int(rng.integers(1, 40)))
            lhs = dirichlet_mu(f, m1 + m2)
            rhs = dirichlet_mu(f, m1) + dirichlet_mu(f, m2)
            assert abs(lhs - rhs) <= 1e-10 * max(1, abs(rhs))

    def test_scaling(self, rng):
        for _ in range(50):
            mu = random_atomic(rng, 4)
            c = float(rng.uniform(0.01, 10))
            f = random_poly(rng, 25)
            assert abs(dirichlet_mu(f, c * mu) - c * dirichlet_mu(f, mu)) <= 1e-10 * c * dirichlet_mu(f, mu)

    def test_mixed_sum(self):
        mu = dirac(0.3) + uniform_circle(64)
        assert isinstance(mu, MeasureSum)
        f = [0, 1, 1]
        assert dirichlet_mu(f, mu) == pytest.approx(dirichlet_mu(f, dirac(0.3)) + 3, rel=1e-13)
        assert mu.total_mass == pytest.approx(2, abs=1e-14)

    def test_bad_scale(self):
        with pytest.raises(ValueError):
            dirac(0).scaled(-1)


class TestDefiniteness:
    def test_zero_norm_means_zero(self, rng):
        for mu in (dirac(0.5), dirac(1), uniform_circle(32)):
            assert dmu_norm_sq([0, 0, 0], mu) == 0
            for _ in range(20):
                f = random_poly(rng, 10, scale=1e-3)
                assert dmu_norm_sq(f, mu) > 1e-12

    def test_reproducible_bits(self, rng):
        f = random_poly(rng, 40)
        mu = uniform_circle(256) + random_atomic(rng, 5)
        assert dirichlet_mu(f, mu) == dirichlet_mu(f, mu)
        assert dirichlet_mu(f, mu, threads=1) == dirichlet_mu(f, mu, threads=4)


class TestValidation:
    def test_rejects_bad_atoms(self):
        with pytest.raises(ValueError):
            AtomicMeasure(((0.5, -1),))
        with pytest.raises(ValueError):
            AtomicMeasure(((1.5, 1),))
        with pytest.raises(ValueError):
            AtomicMeasure(())

    def test_rejects_bad_circle(self):
        with pytest.raises(ValueError):
            CircleMeasure(None, 7)
        with pytest.raises(ValueError):
            CircleMeasure(lambda t: -np.ones_like(t), 16)
        with pytest.raises(ValueError):
            CircleMeasure([1.0] * 10, 16)

    def test_rejects_bad_disk(self):
        with pytest.raises(ValueError):
            DiskDensityMeasure(None, 2, 16)


class TestConfig:
    def test_atomic(self):
        mu = measure_from_config({"type": "atomic", "id": "m", "atoms": [{"re": 0.5, "im": 0, "mass": 2}]})
        assert mu.measure_id == "m"
        assert dirichlet_mu([0, 1], mu) == 2

    def test_circle_table(self):
        mu = measure_from_config({"type": "circle", "density_table": [2.0] * 16})
        assert mu.node_count == 16
        assert mu.total_mass == pytest.approx(2)

    def test_disk(self):
        mu = measure_from_config({"type": "disk", "nodes_r": 8, "nodes_theta": 16})
        assert mu.total_mass == pytest.approx(1)

    def test_parse_sum(self):
        cfg = parse_config({"measures": [{"type": "sum", "parts": [
            {"type": "atomic", "atoms": [{"re": 0, "im": 0, "mass": 1}]},
            {"type": "circle", "nodes": 32},
        ]}]})
        assert dirichlet_mu([0, 1], cfg.measures[0]) == pytest.approx(2)

    def test_unknown_type(self):
        with pytest.raises((ValueError, ConfigError)):
            measure_from_config({"type": "blob"})
