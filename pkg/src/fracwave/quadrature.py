"""Quadrature engine shared by every module.

All rules live on the unit interval. Integrals of the form
``int_0^A g(w**p) dw`` (which is what every desingularized fractional
integral in this package reduces to) go through :func:`power_rule`, which
applies a polynomial grading ``w = z**GRADE`` so that the fractional power
``w**p`` no longer limits the convergence of the base rule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

#: exponent of the grading substitution applied by :func:`power_rule`
GRADE = 3


class Scheme(str, enum.Enum):
    GAUSS_LEGENDRE = "gauss_legendre"
    MIDPOINT = "midpoint"


@dataclass(frozen=True)
class QuadratureSpec:
    """Base rule used by every integral in the package."""

    #: number of nodes of the one-dimensional rule
    node_count: int = 256
    #: base rule on the unit interval
    scheme: Scheme = Scheme.GAUSS_LEGENDRE
    #: absolute accuracy the caller expects; used by verification thresholds
    abs_tol: float = 1e-10

    def __post_init__(self) -> None:
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        if int(self.node_count) != self.node_count or self.node_count < 2:
            raise ValueError(f"node_count must be an integer >= 2, got {self.node_count}")
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")


DEFAULT_QUADRATURE = QuadratureSpec()


@lru_cache(maxsize=64)
def _unit_rule(scheme: Scheme, n: int) -> tuple[np.ndarray, np.ndarray]:
    if scheme is Scheme.GAUSS_LEGENDRE:
        x, w = np.polynomial.legendre.leggauss(n)
        z, wz = 0.5 * (x + 1.0), 0.5 * w
    else:
        z = (np.arange(n) + 0.5) / n
        wz = np.full(n, 1.0 / n)
    z.setflags(write=False)
    wz.setflags(write=False)
    return z, wz


def unit_rule(q: QuadratureSpec) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the base rule on ``[0, 1]`` (read-only, cached)."""
    return _unit_rule(q.scheme, int(q.node_count))


@lru_cache(maxsize=256)
def _power_rule(scheme: Scheme, n: int, power: float) -> tuple[np.ndarray, np.ndarray]:
    z, wz = _unit_rule(scheme, n)
    y = z ** (GRADE * power)
    w = GRADE * z ** (GRADE - 1) * wz
    y.setflags(write=False)
    w.setflags(write=False)
    return y, w


def power_rule(power: float, q: QuadratureSpec) -> tuple[np.ndarray, np.ndarray]:
    """Rule ``(y, w)`` with ``sum(w * g(y)) ~ int_0^1 g(v**power) dv``.

    The nodes are already raised to ``power``, so ``g`` only ever sees the
    transformed variable.
    """
    if not power > 0:
        raise ValueError(f"power must be positive, got {power}")
    return _power_rule(q.scheme, int(q.node_count), float(power))


def _values(g: Callable, x: np.ndarray) -> np.ndarray:
    # callers may hand in functions returning scalars (e.g. constants)
    return np.broadcast_to(np.asarray(g(x), dtype=float), np.shape(x))


def integrate(g: Callable, a: float, b: float, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """``int_a^b g(x) dx`` with the base rule; ``g`` must accept arrays."""
    z, w = unit_rule(q)
    x = a + (b - a) * z
    return float((b - a) * np.dot(w, _values(g, x)))


def integrate_powered(
    g: Callable, power: float, upper: float, q: QuadratureSpec = DEFAULT_QUADRATURE
) -> float:
    """``int_0^upper g(w**power) dw`` for ``upper >= 0``.

    ``g`` is evaluated on the values ``w**power`` only, so an integrand that
    is smooth in ``w**power`` but not in ``w`` is handled at full accuracy.
    """
    if upper < 0:
        raise ValueError(f"upper limit must be nonnegative, got {upper}")
    if upper == 0:
        return 0.0
    y, w = power_rule(power, q)
    return float(upper * np.dot(w, _values(g, upper**power * y)))
