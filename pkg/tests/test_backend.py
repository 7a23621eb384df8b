import os
import subprocess
import sys

import numpy as np
import pytest

from dirichlet_approx import _backend

from conftest import available_backends, random_poly
from oracles import direct_local_norm, direct_tail


def test_local_norms_against_oracle(backend, rng):
    a = random_poly(rng, 25)
    zs = np.concatenate([np.exp(2j * np.pi * rng.random(8)), 0.9 * rng.random(8) * np.exp(1j * rng.random(8))])
    got = backend.local_norms(a, zs)
    np.testing.assert_allclose(got, [direct_local_norm(a, z) for z in zs], rtol=1e-12)


def test_tail_coefficients_against_oracle(backend, rng):
    a = random_poly(rng, 40)
    zeta = 0.6 - 0.7j
    const, b = backend.tail_coefficients(a, zeta)
    np.testing.assert_allclose(b, direct_tail(a, zeta), atol=1e-11)
    assert abs(const - np.polynomial.polynomial.polyval(zeta, a)) <= 1e-11


def test_horner_and_h2(backend, rng):
    a = random_poly(rng, 12)
    z = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    np.testing.assert_allclose(backend.horner(a, z), np.polynomial.polynomial.polyval(z, a), rtol=1e-12)
    assert backend.h2_norm_sq(a) == pytest.approx(float(np.sum(np.abs(a) ** 2)), rel=1e-14)


def test_degree_zero_edge_cases(backend):
    np.testing.assert_array_equal(backend.local_norms(np.array([3 + 0j]), np.array([0.5, 1])), [0, 0])
    const, b = backend.tail_coefficients(np.array([2 + 0j]), 0.5)
    assert const == 2 and np.all(b == 0)


@pytest.mark.skipif(len(available_backends()) < 2, reason="compiled core not built")
def test_backends_agree(rng):
    py = _backend.load_backend("python")
    cy = _backend.load_backend("cython")
    a = random_poly(rng, 120)
    zs = np.sqrt(rng.random(700)) * np.exp(2j * np.pi * rng.random(700))
    np.testing.assert_allclose(py.local_norms(a, zs), cy.local_norms(a, zs), rtol=1e-14)
    np.testing.assert_allclose(py.horner(a, zs), cy.horner(a, zs), rtol=1e-13)
    assert py.h2_norm_sq(a) == pytest.approx(cy.h2_norm_sq(a), rel=1e-15)


def test_thread_count_does_not_change_results(rng, monkeypatch):
    a = random_poly(rng, 60)
    zs = np.sqrt(rng.random(10000)) * np.exp(2j * np.pi * rng.random(10000))
    one = _backend.local_norms(a, zs, threads=1)
    four = _backend.local_norms(a, zs, threads=4)
    np.testing.assert_array_equal(one, four)
    monkeypatch.setenv("DIRICHLET_THREADS", "3")
    assert _backend.thread_count() == 3
    np.testing.assert_array_equal(_backend.local_norms(a, zs), one)


def test_env_forces_python_fallback():
    env = dict(os.environ, DIRICHLET_BACKEND="python")
    out = subprocess.run(
        [sys.executable, "-c", "import dirichlet_approx as d; print(d.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        _backend.load_backend("fortran")
