import numpy as np
import pytest

from dirichlet_approx import _backend

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_poly(rng, degree, scale=1.0):
    c = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
    return scale * c


def random_disk_point(rng, boundary_fraction=0.3):
    if rng.random() < boundary_fraction:
        return complex(np.exp(2j * np.pi * rng.random()))
    r = np.sqrt(rng.random())
    return complex(r * np.exp(2j * np.pi * rng.random()))


def available_backends():
    names = ["python"]
    try:
        _backend.load_backend("cython")
        names.append("cython")
    except ImportError:
        pass
    return names


@pytest.fixture(params=available_backends())
def backend(request):
    return _backend.load_backend(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
