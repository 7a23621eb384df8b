"""Summability weight arrays ``w_{n,k}`` and their hypothesis checks.

An array qualifies for norm convergence in every ``D_mu`` when

    (E0) w_{n,k} = 0 for k > n
    (E1) w_{n,k} -> 1 as n -> infinity, each fixed k
    (E2) |w_{n,k}| <= M
    (E3) |w_{n,k} - w_{n,k+1}| <= L / n

Arrays are generated row by row from a function, never stored as matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .series import CoefficientSeries, as_series

# slack for rounding in the bound comparisons
_EPS = 1e-12


@dataclass(frozen=True)
class WeightArray:
    """Triangular weight array.

    ``row_fn(n, k)`` receives an integer ``n`` and an integer array ``k``
    and returns the weights ``w_{n,k}``.  ``L = None`` records that no
    finite difference constant is claimed.
    """

    name: str
    row_fn: Callable[[int, np.ndarray], np.ndarray]
    M: float
    L: float | None
    max_n: int | None = None

    def row(self, n: int, length: int | None = None) -> np.ndarray:
        """Weights ``w_{n,0..length-1}`` (default length ``n + 2``)."""
        if n < 0:
            raise ValueError("row index n must be >= 0")
        length = n + 2 if length is None else length
        k = np.arange(length)
        return np.asarray(self.row_fn(n, k), dtype=np.complex128).reshape(length)

    def __call__(self, n: int, k: int) -> complex:
        return complex(self.row(n, k + 1)[k])


def _fejer_row(n, k):
    return np.where(k <= n, 1.0 - k / (n + 1.0), 0.0)


def _taylor_row(n, k):
    return np.where(k <= n, 1.0, 0.0)


def _vallee_poussin_row(n, k):
    m = -(-n // 2)
    ramp = (n + 1.0 - k) / (n + 1.0 - m)
    return np.where(k <= m, 1.0, np.where(k <= n, ramp, 0.0))


def fejer() -> WeightArray:
    """Cesaro means: ``w_{n,k} = 1 - k/(n+1)``."""
    return WeightArray("fejer", _fejer_row, 1.0, 1.0)


def taylor_truncation() -> WeightArray:
    """Partial sums ``s_n``; fails (E3) for every finite L."""
    return WeightArray("taylor_truncation", _taylor_row, 1.0, None)


def vallee_poussin() -> WeightArray:
    """Flat to ``ceil(n/2)``, then a linear ramp down to ``w_{n,n+1} = 0``."""
    return WeightArray("vallee_poussin", _vallee_poussin_row, 1.0, 4.0)


def table_array(rows, name="table", M=None, L=None) -> WeightArray:
    """Array given by explicit rows ``rows[n][k]``; entries past a row are 0.

    Undeclared ``M``/``L`` default to the values observed in the table.
    """
    rows = [np.asarray(r, dtype=np.complex128).ravel() for r in rows]
    if not rows:
        raise ValueError("table array needs at least one row")
    for r in rows:
        if not np.all(np.isfinite(r)):
            raise ValueError("table weights must be finite")

    def row_fn(n, k):
        if n >= len(rows):
            raise ValueError(f"table array {name!r} defines rows 0..{len(rows) - 1} only")
        r = rows[n]
        out = np.zeros(k.shape, dtype=np.complex128)
        inside = k < r.shape[0]
        out[inside] = r[k[inside]]
        return out

    if M is None:
        M = max(float(np.max(np.abs(r))) for r in rows)
    if L is None:
        L = 0.0
        for n in range(1, len(rows)):
            w = row_fn(n, np.arange(n + 2))
            L = max(L, n * float(np.max(np.abs(np.diff(w)))))
    return WeightArray(name, row_fn, float(M), float(L), max_n=len(rows) - 1)


def array_by_name(name: str) -> WeightArray:
    try:
        return BUILTIN[name]()
    except KeyError:
        raise ValueError(f"unknown weight array {name!r}; expected one of {sorted(BUILTIN)}") from None


BUILTIN = {
    "fejer": fejer,
    "taylor_truncation": taylor_truncation,
    "vallee_poussin": vallee_poussin,
}


@dataclass(frozen=True)
class ConditionResult:
    condition: str
    passed: bool
    witness: tuple[int, int] | None = None
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    array_name: str
    N_max: int
    tol: float
    results: tuple[ConditionResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, condition: str) -> ConditionResult:
        for r in self.results:
            if r.condition == condition:
                return r
        raise KeyError(condition)


def validate(array: WeightArray, N_max: int = 512, tol: float = 0.05) -> ValidationReport:
    """Falsification sweep of (E0)-(E3) over rows ``n <= N_max``.

    (E1) is a limit statement; it is checked as ``|w_{N_max,k} - 1| <= tol``
    for ``k <= log2(N_max)``.  A failure witness is the first ``(n, k)``
    found (largest violation for (E3) when no ``L`` is declared).
    """
    if N_max < 8:
        raise ValueError("N_max must be >= 8")
    if array.max_n is not None:
        N_max = min(N_max, array.max_n)
    e0 = e2 = e3 = None
    worst = (0.0, None)
    for n in range(N_max + 1):
        w = array.row(n, 2 * n + 2)
        if e0 is None:
            bad = np.flatnonzero(w[n + 1:] != 0)
            if bad.size:
                e0 = (n, n + 1 + int(bad[0]))
        if e2 is None:
            bad = np.flatnonzero(np.abs(w) > array.M * (1 + _EPS))
            if bad.size:
                e2 = (n, int(bad[0]))
        if n >= 1:
            diff = np.abs(np.diff(w[: n + 2]))
            if array.L is None:
                scaled = n * diff
                k = int(np.argmax(scaled))
                if scaled[k] >= worst[0]:
                    worst = (float(scaled[k]), (n, k))
            elif e3 is None:
                bad = np.flatnonzero(diff > array.L / n * (1 + _EPS))
                if bad.size:
                    e3 = (n, int(bad[0]))

    results = [
        ConditionResult("E0", e0 is None, e0, "w_{n,k} = 0 for k > n"),
    ]
    kmax = int(math.log2(max(N_max, 1)))
    last = array.row(N_max, kmax + 1)
    dev = np.abs(last - 1.0)
    bad = np.flatnonzero(dev > tol)
    results.append(ConditionResult(
        "E1", bad.size == 0, (N_max, int(bad[0])) if bad.size else None,
        f"max |w_(N_max,k) - 1| = {float(np.max(dev)):.3g} for k <= {kmax}",
    ))
    results.append(ConditionResult("E2", e2 is None, e2, f"|w| <= M = {array.M:g}"))
    if array.L is None:
        results.append(ConditionResult(
            "E3", False, worst[1],
            f"no finite L declared; n |w_(n,k) - w_(n,k+1)| reaches {worst[0]:.6g}",
        ))
    else:
        results.append(ConditionResult("E3", e3 is None, e3, f"|dw| <= L/n with L = {array.L:g}"))
    return ValidationReport(array.name, N_max, tol, tuple(results))


def apply_to_g(array: WeightArray, g, n: int) -> CoefficientSeries:
    """``g_n(z) = sum_{k<n} w_{n,k+1} b_k z^k``."""
    if n < 1:
        raise ValueError("apply_to_g needs n >= 1")
    g = as_series(g)
    w = array.row(n, n + 1)
    return CoefficientSeries(w[1:] * g.padded(n))
