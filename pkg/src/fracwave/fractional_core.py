r"""Caputo derivatives of order :math:`s \in (0, 1)`.

Two independent evaluations are provided:

* :func:`caputo_direct` integrates the defining singular kernel,

  .. math::

      D^s_t u(t) = \frac{1}{\Gamma(1-s)} \int_0^t \frac{\dot u(\tau)}{(t-\tau)^s}\,d\tau,

  after the substitution :math:`w = (t-\tau)^{1-s}`, which turns it into
  :math:`\frac{1}{1-s}\int_0^{t^{1-s}} \dot u(t - w^{1/(1-s)})\,dw`.

* :func:`caputo_ibp` evaluates the rescaled derivative obtained after one
  integration by parts,

  .. math::

      \partial^s_t u(t) = (2-s)\,t^{1-s}\,\dot u(0)
          + \int_0^{t^{2-s}} \ddot u(t - \vartheta^\beta)\,d\vartheta,
      \qquad \beta = \frac{1}{2-s},

  which equals ``scaling_constant(order) * caputo_direct(...)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec, integrate_powered

__all__ = [
    "FractionalOrder",
    "TimeFunction",
    "caputo_direct",
    "caputo_ibp",
    "gamma_fn",
    "scaling_constant",
]


@dataclass(frozen=True)
class FractionalOrder:
    """Order ``s`` of the time derivative together with its derived exponents."""

    s: float
    alpha: float = field(init=False)
    beta: float = field(init=False)

    def __post_init__(self) -> None:
        s = float(self.s)
        if not 0.0 < s < 1.0:
            raise ValueError(f"fractional order must lie in the open interval (0, 1), got {s}")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "beta", 1.0 / (2.0 - s))
        object.__setattr__(self, "alpha", (1.0 - s) / (2.0 - s))


def _as_order(order: FractionalOrder | float) -> FractionalOrder:
    return order if isinstance(order, FractionalOrder) else FractionalOrder(order)


@dataclass(frozen=True)
class TimeFunction:
    """A smooth function of time with analytically supplied derivatives.

    All three callables must accept numpy arrays.
    """

    value: Callable
    deriv1: Callable
    deriv2: Callable

    @classmethod
    def from_polynomial(cls, coeffs) -> "TimeFunction":
        """Polynomial with coefficients in increasing degree order."""
        p = np.polynomial.Polynomial(coeffs)
        d1 = p.deriv(1)
        d2 = p.deriv(2)
        return cls(p, d1, d2)

    @classmethod
    def monomial(cls, power: int) -> "TimeFunction":
        return cls.from_polynomial([0.0] * power + [1.0])

    @classmethod
    def constant(cls, c: float) -> "TimeFunction":
        return cls.from_polynomial([c])

    def __add__(self, other: "TimeFunction") -> "TimeFunction":
        if not isinstance(other, TimeFunction):
            return NotImplemented
        return TimeFunction(
            lambda t: self.value(t) + other.value(t),
            lambda t: self.deriv1(t) + other.deriv1(t),
            lambda t: self.deriv2(t) + other.deriv2(t),
        )

    def __rmul__(self, a: float) -> "TimeFunction":
        return TimeFunction(
            lambda t: a * self.value(t),
            lambda t: a * self.deriv1(t),
            lambda t: a * self.deriv2(t),
        )

    def check_derivatives(self, points, h: float = 1e-4, tol: float = 1e-6) -> bool:
        """Compare the supplied derivatives with central differences at ``points``."""
        t = np.asarray(points, dtype=float)
        f = self.value
        d1 = (f(t + h) - f(t - h)) / (2 * h)
        d2 = (f(t + h) - 2 * f(t) + f(t - h)) / h**2
        scale = 1.0 + np.abs(np.asarray(f(t), dtype=float))
        ok1 = np.all(np.abs(d1 - self.deriv1(t)) <= tol * scale)
        ok2 = np.all(np.abs(d2 - self.deriv2(t)) <= tol * scale)
        return bool(ok1 and ok2)


def gamma_fn(x: float) -> float:
    """Euler's Gamma function on the positive half-line."""
    x = float(x)
    if not x > 0:
        raise ValueError(f"gamma_fn is only defined here for x > 0, got {x}")
    return math.gamma(x)


def scaling_constant(order: FractionalOrder | float) -> float:
    """``(2 - s)(1 - s) Gamma(1 - s)``, the factor between the two derivatives."""
    s = _as_order(order).s
    return (2.0 - s) * (1.0 - s) * gamma_fn(1.0 - s)


def _check_time(t: float) -> float:
    t = float(t)
    if not t > 0:
        raise ValueError(f"evaluation time must be positive, got {t}")
    return t


def caputo_direct(
    u: TimeFunction,
    order: FractionalOrder | float,
    t: float,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Caputo derivative ``D^s_t u(t)`` from the singular-kernel definition."""
    order = _as_order(order)
    t = _check_time(t)
    s = order.s
    # (t - tau) = w**(1/(1-s)); the kernel cancels against the Jacobian
    integral = integrate_powered(lambda y: u.deriv1(t - y), 1.0 / (1.0 - s), t ** (1.0 - s), q)
    return integral / ((1.0 - s) * gamma_fn(1.0 - s))


def caputo_ibp(
    u: TimeFunction,
    order: FractionalOrder | float,
    t: float,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Rescaled Caputo derivative ``(2-s)(1-s)Gamma(1-s) D^s_t u(t)``.

    Uses the integrated-by-parts form, so only ``u.deriv1(0)`` and
    ``u.deriv2`` on ``[0, t]`` are needed.
    """
    order = _as_order(order)
    t = _check_time(t)
    s = order.s
    du0 = float(np.asarray(u.deriv1(np.zeros(1)), dtype=float).reshape(-1)[0])
    boundary = (2.0 - s) * t ** (1.0 - s) * du0
    bulk = integrate_powered(lambda y: u.deriv2(t - y), order.beta, t ** (2.0 - s), q)
    return boundary + bulk
