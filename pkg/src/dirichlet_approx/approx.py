"""Summability approximants and convergence experiments.

``build_pn`` is the measure-independent approximant ``sum w_{n,k} a_k z^k``;
``build_fn`` is the local approximant ``a + (z - zeta) g_n(z)`` that depends
on ``zeta`` through the quotient ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import WeightArray, apply_to_g, fejer, taylor_truncation
from .local import LocalDecomposition, decompose
from .measures import DiskMeasure, dirac, dirichlet_mu, dmu_norm_sq
from .series import CoefficientSeries, Kind, as_disk_point, as_series, make_family


@dataclass(frozen=True)
class ConvergenceRecord:
    n: int
    err_sq: float
    norm_sq: float
    bound_sq: float
    array_name: str = ""
    measure_id: str = ""


def build_pn(f, array: WeightArray, n: int) -> CoefficientSeries:
    if n < 0:
        raise ValueError("n must be >= 0")
    f = as_series(f)
    m = min(n, len(f) - 1)
    w = array.row(n, m + 1)
    return CoefficientSeries(w * f.coeffs[: m + 1], Kind.EXACT)


def build_fn(f, array: WeightArray, n: int, zeta) -> CoefficientSeries:
    """Local approximant ``a + (z - zeta) g_n(z)`` (for n = 0, ``g_0 = 0``)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    dec = decompose(f, zeta)
    if n == 0:
        return CoefficientSeries([dec.a])
    gn = apply_to_g(array, dec.g, n)
    return LocalDecomposition(dec.zeta, dec.a, gn).recompose()


def build_fn_rearranged(f, array: WeightArray, n: int, zeta) -> CoefficientSeries:
    """Same polynomial as :func:`build_fn`, assembled term by term as

        sum_k w_{n,k} a_k z^k + zeta sum_k (w_{n,k} - w_{n,k+1}) b_k z^k + (1 - w_{n,0}) a
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    f = as_series(f)
    dec = decompose(f, zeta)
    w = array.row(n, n + 2)
    a = f.padded(n + 1)
    b = dec.g.padded(n + 1)
    c = w[: n + 1] * a + dec.zeta * (w[: n + 1] - w[1: n + 2]) * b
    c[0] += (1.0 - w[0]) * dec.a
    return CoefficientSeries(c)


def taylor_tail_fn(f, zeta, n: int) -> CoefficientSeries:
    """``sum_{k<n} a_k z^k + (sum_{k>=n} a_k zeta^(k-n)) z^n``."""
    f = as_series(f)
    zeta = as_disk_point(zeta)
    deg = f.degree()
    if not 1 <= n <= deg:
        raise ValueError(f"taylor_tail_fn needs 1 <= n <= deg f = {deg}")
    tail = 0j
    for ak in f.coeffs[deg:n - 1:-1]:
        tail = ak + zeta * tail
    c = np.empty(n + 1, dtype=np.complex128)
    c[:n] = f.coeffs[:n]
    c[n] = tail
    return CoefficientSeries(c)


def uniform_bound_factor(array: WeightArray) -> float:
    """``(1 + M + L)^2``, or NaN when the array declares no L."""
    if array.L is None:
        return float("nan")
    return (1.0 + array.M + array.L) ** 2


def convergence_run(f, mu: DiskMeasure, array: WeightArray, n_list, threads=None):
    """Error of ``p_n`` in ``D_mu`` for each ``n`` of a strictly increasing list."""
    n_list = [int(n) for n in n_list]
    if not n_list or any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n_list must be nonempty and strictly increasing")
    f = as_series(f)
    bound = uniform_bound_factor(array) * dirichlet_mu(f, mu, threads=threads)
    records = []
    for n in n_list:
        diff = f - build_pn(f, array, n)
        records.append(ConvergenceRecord(
            n=n,
            err_sq=dirichlet_mu(diff, mu, threads=threads),
            norm_sq=dmu_norm_sq(diff, mu, threads=threads),
            bound_sq=bound,
            array_name=array.name,
            measure_id=getattr(mu, "measure_id", ""),
        ))
    return records


def lacunary_tail(J: int) -> np.ndarray:
    """Tail sequence ``t_m = 2^(-j/2)`` at ``m = 2^j`` (1 <= j <= J), else 0.

    Indexed ``m = 0..2^J + 1`` so that ``a_m = t_m - t_{m+1}`` covers the
    full truncation degree ``N = 2^J``.
    """
    t = np.zeros(2 ** J + 2)
    for j in range(1, J + 1):
        t[2 ** j] = 2.0 ** (-j / 2)
    return t


def lacunary_function(J: int) -> CoefficientSeries:
    f = make_family("tail_designed", lacunary_tail(J), 2 ** J)
    return CoefficientSeries(f.coeffs, f.kind, f"lacunary(J={J})")


def taylor_error_closed_form(t: np.ndarray, n: int) -> float:
    """``D_1(f - s_n f) = (n+1)|t_{n+1}|^2 + sum_{k>n} |t_{k+1}|^2``."""
    t = np.asarray(t)
    return float((n + 1) * abs(t[n + 1]) ** 2 + np.sum(np.abs(t[n + 2:]) ** 2))


@dataclass(frozen=True)
class CounterexampleRecord:
    n: int
    taylor_err_sq: float
    taylor_closed_form: float
    fejer_err_sq: float


def counterexample_run(J: int):
    """Partial sums versus Cesaro means at ``zeta = 1`` for the lacunary function.

    At ``n = 2^j - 1`` the partial-sum error is at least ``(n+1) t_{n+1}^2 = 1``
    while the Cesaro error goes to zero.
    """
    if J < 3:
        raise ValueError("counterexample_run needs J >= 3")
    t = lacunary_tail(J)
    f = lacunary_function(J)
    mu = dirac(1.0, measure_id="delta(1)")
    taylor, cesaro = taylor_truncation(), fejer()
    out = []
    for j in range(1, J + 1):
        n = 2 ** j - 1
        out.append(CounterexampleRecord(
            n=n,
            taylor_err_sq=dirichlet_mu(f - build_pn(f, taylor, n), mu),
            taylor_closed_form=taylor_error_closed_form(t, n),
            fejer_err_sq=dirichlet_mu(f - build_pn(f, cesaro, n), mu),
        ))
    return out
