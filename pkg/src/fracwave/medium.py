"""Geometry of the ramified medium and the error analysis of its delays.

Branch ``S_k`` has length ``L + lambda_{k-1}``, where

    b_N      = sum_{k<=N} k**(-alpha)
    ell_k    = L / (k**alpha * b_N)
    lambda_k = ell_1 + ... + ell_k        (lambda_0 = 0, lambda_N = L)

The delays ``lambda_{k-1}`` approximate ``L (k/N)**(1-alpha)``; the
discrepancy ``eta_{k,N}`` and its supremum ``epsilon_N`` vanish as N grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fractional_core import FractionalOrder

__all__ = [
    "MAX_BRANCHES",
    "DelayErrorReport",
    "MediumGeometry",
    "MediumSpec",
    "build_geometry",
    "compensated_cumsum",
    "epsilon_sweep",
    "epsilon_upper_bound",
    "eta_errors",
    "lambda_sandwich_bounds",
    "lambda_sandwich_check",
]

MAX_BRANCHES = 10**8


@dataclass(frozen=True)
class MediumSpec:
    N: int
    L: float
    order: FractionalOrder

    def __post_init__(self) -> None:
        if isinstance(self.N, bool) or int(self.N) != self.N or self.N < 1:
            raise ValueError(f"branch count N must be a positive integer, got {self.N}")
        if self.N > MAX_BRANCHES:
            raise ValueError(f"branch count N={self.N} exceeds the guard {MAX_BRANCHES}")
        if not (math.isfinite(self.L) and self.L > 0):
            raise ValueError(f"base length L must be positive, got {self.L}")
        if not isinstance(self.order, FractionalOrder):
            object.__setattr__(self, "order", FractionalOrder(self.order))
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "L", float(self.L))


@dataclass(frozen=True, eq=False)
class MediumGeometry:
    """Branch lengths and cumulative delays; arrays are read-only.

    ``ell[k-1]`` is ``ell_k`` and ``lam[k]`` is ``lambda_k`` (so ``lam[0] = 0``).
    """

    spec: MediumSpec
    b_N: float
    ell: np.ndarray
    lam: np.ndarray
    branch_length: np.ndarray

    @property
    def N(self) -> int:
        return self.spec.N

    @property
    def L(self) -> float:
        return self.spec.L


@dataclass(frozen=True, eq=False)
class DelayErrorReport:
    eta: np.ndarray
    epsilon_N: float
    upper_bound: float


def compensated_cumsum(x) -> np.ndarray:
    """Prefix sums of ``x`` with the rounding error of every step fed back.

    Same accuracy as running Neumaier summation on each prefix, but
    vectorized: the error of each sequential addition is recovered exactly
    with TwoSum and accumulated separately.
    """
    x = np.asarray(x, dtype=float)
    s = np.cumsum(x)
    prev = np.concatenate(([0.0], s[:-1]))
    bb = s - prev
    err = (prev - (s - bb)) + (x - bb)
    return s + np.cumsum(err)


def _prefix_power_sums(n: int, alpha: float) -> np.ndarray:
    """``P[m] = sum_{j<=m} j**(-alpha)`` for ``m = 0..n``."""
    k = np.arange(1, n + 1, dtype=float)
    return np.concatenate(([0.0], compensated_cumsum(k**-alpha)))


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def build_geometry(spec: MediumSpec) -> MediumGeometry:
    N, L, alpha = spec.N, spec.L, spec.order.alpha
    P = _prefix_power_sums(N, alpha)
    b_N = float(P[-1])
    k = np.arange(1, N + 1, dtype=float)
    ell = L / (k**alpha * b_N)
    # ratio form keeps lambda_N == L exactly
    lam = L * (P / b_N)
    lam[0] = 0.0
    branch_length = L + lam[:-1]
    return MediumGeometry(
        spec=spec,
        b_N=b_N,
        ell=_readonly(ell),
        lam=_readonly(lam),
        branch_length=_readonly(branch_length),
    )


def epsilon_upper_bound(N: int, order: FractionalOrder, L: float = 1.0) -> float:
    """Explicit bound on ``epsilon_N`` valid for every ``N >= 2``."""
    if N < 2:
        raise ValueError(f"the bound needs N >= 2, got {N}")
    alpha = order.alpha
    e = 1.0 - alpha
    half = float(N) ** (-e / 2)
    full = float(N) ** (-e)
    return L * (
        3.0 * half
        + abs(1.0 - (1.0 - half) / (1.0 - alpha * full))
        + abs((1.0 - alpha * full) / (1.0 - full) - 1.0)
    )


def eta_errors(geom: MediumGeometry, spec: MediumSpec | None = None) -> DelayErrorReport:
    spec = geom.spec if spec is None else spec
    if spec != geom.spec:
        raise ValueError("geometry was not built from this spec")
    N, L = spec.N, spec.L
    k = np.arange(1, N + 1, dtype=float)
    eta = L * (k / N) ** (1.0 - spec.order.alpha) - geom.lam[:-1]
    eps = float(np.max(np.abs(eta)))
    bound = epsilon_upper_bound(N, spec.order, L) if N >= 2 else math.inf
    return DelayErrorReport(eta=_readonly(eta), epsilon_N=eps, upper_bound=bound)


def epsilon_sweep(N_values, order: FractionalOrder, L: float = 1.0) -> np.ndarray:
    """``epsilon_N`` for many N at once, sharing one prefix-sum table.

    Agrees with ``eta_errors(build_geometry(...)).epsilon_N`` up to rounding.
    """
    N_values = [int(n) for n in N_values]
    if not N_values or min(N_values) < 1:
        raise ValueError("N_values must be a nonempty list of positive integers")
    e = 1.0 - order.alpha
    P = _prefix_power_sums(max(N_values), order.alpha)
    out = np.empty(len(N_values))
    for i, N in enumerate(N_values):
        k = np.arange(1, N + 1, dtype=float)
        eta = (k / N) ** e - P[:N] / P[N]
        out[i] = L * np.max(np.abs(eta))
    return out


def lambda_sandwich_bounds(spec: MediumSpec) -> tuple[np.ndarray, np.ndarray]:
    """Lower and upper bounds on ``lambda_{k-1} / L`` for ``k = 1..N``.

    They come from comparing partial sums of ``j**(-alpha)`` with integrals.
    For ``k = 1`` the sum is empty and the integral comparison does not
    apply, so the upper bound there is the exact value 0.
    """
    N, alpha = spec.N, spec.order.alpha
    if N < 2:
        raise ValueError(f"the sandwich needs N >= 2, got {N}")
    e = 1.0 - alpha
    k = np.arange(1, N + 1, dtype=float)
    lower = (k**e - 1.0) / (N**e - alpha)
    upper = ((k - 1.0) ** e - alpha) / ((N + 1.0) ** e - 1.0)
    upper[0] = 0.0
    return lower, upper


def lambda_sandwich_check(geom: MediumGeometry, spec: MediumSpec | None = None, rtol: float = 1e-13) -> bool:
    """True iff every ``lambda_{k-1}/L`` lies between the integral-comparison bounds.

    ``rtol`` only absorbs rounding in the bound expressions.
    """
    spec = geom.spec if spec is None else spec
    lower, upper = lambda_sandwich_bounds(spec)
    x = geom.lam[:-1] / spec.L
    slack = rtol * np.maximum(1.0, np.abs(x))
    return bool(np.all(lower <= x + slack) and np.all(x <= upper + slack))
