r"""Continuum limit of the delayed superposition and its fractional residual.

For large N the branch average converges to

.. math::

    u(x, t) = \frac{1}{T^{2-s}} \int_0^{T^{2-s}}
        f_o\Big(\frac{x - ct + c\,\vartheta^{1/(2-s)}}{L}\Big)\,d\vartheta
      = \int_0^1 f_o\big(x/L - t/T + \bar\vartheta^{1/(2-s)}\big)\,d\bar\vartheta,

with :math:`T = L/c`. The residual of the fractional diffusion operator
:math:`\mathcal L = \partial^s_t - \kappa c^s L^{2-s} \partial^2_x` applied to
``u`` is assembled from one- and two-dimensional integrals of ``f_o'`` and
``f_o''``; at ``(x, t) = (L, T)`` the choice of ``kappa`` from :func:`kappa`
cancels it up to ``O(mu)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .errors import RegimeWarning
from .fractional_core import FractionalOrder, TimeFunction, caputo_ibp
from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec, power_rule
from .wave import WaveProfile, profile_eval

__all__ = [
    "CrosscheckReport",
    "DimensionlessMap",
    "ResidualReport",
    "ScaleParams",
    "caputo_of_u_crosscheck",
    "continuum_time_function",
    "continuum_u",
    "dimensionless_transform",
    "kappa",
    "residual_general",
    "scaled_residual_at_LT",
]


@dataclass(frozen=True)
class ScaleParams:
    """Length ``L``, speed ``c`` and order, with the derived characteristic scales."""

    L: float
    c: float
    order: FractionalOrder

    def __post_init__(self) -> None:
        for name in ("L", "c"):
            v = float(getattr(self, name))
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive, got {v}")
            object.__setattr__(self, name, v)
        if not isinstance(self.order, FractionalOrder):
            object.__setattr__(self, "order", FractionalOrder(self.order))

    @property
    def T(self) -> float:
        """Transit time of the base branch."""
        return self.L / self.c

    @property
    def delta(self) -> float:
        return self.T ** (-self.order.s)


@dataclass(frozen=True)
class ResidualReport:
    term_boundary: float
    term_double: float
    term_diffusion: float
    total: float
    kappa_used: float
    mu: float


@dataclass(frozen=True)
class CrosscheckReport:
    route_a: float
    route_b: float
    abs_diff: float


def _unit_integral(p: WaveProfile, deriv: int, shift, beta: float, q: QuadratureSpec):
    """``int_0^1 f_o^{(deriv)}(shift + v**beta) dv``, broadcasting over ``shift``."""
    y, w = power_rule(beta, q)
    shift = np.asarray(shift, dtype=float)
    vals = profile_eval(p, shift[..., None] + y, deriv)
    out = vals @ w
    return out if out.ndim else float(out)


def _double_integral(p: WaveProfile, shift: float, outer_scale: float, beta: float, q: QuadratureSpec) -> float:
    """``int_0^1 int_0^1 f_o''(shift + v**beta + outer_scale * w**beta) dv dw``."""
    y, w = power_rule(beta, q)
    grid = shift + y[None, :] + outer_scale * y[:, None]
    vals = profile_eval(p, grid, 2)
    return float(w @ vals @ w)


def continuum_u(
    p: WaveProfile,
    order: FractionalOrder,
    scales: ScaleParams,
    x,
    t,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
    time_deriv: int = 0,
    space_deriv: int = 0,
):
    """Limit superposition ``u(x, t)`` or one of its derivatives up to order two.

    Vectorized over ``x`` and ``t``. The derivatives integrate ``f_o'`` or
    ``f_o''`` with prefactors ``(-1/T)**time_deriv * (1/L)**space_deriv``.
    """
    if time_deriv < 0 or space_deriv < 0 or time_deriv + space_deriv > 2:
        raise ValueError("total derivative order must be 0, 1 or 2")
    T, L = scales.T, scales.L
    if not T > 0:
        raise ValueError(f"characteristic time must be positive, got {T}")
    shift = np.asarray(x, dtype=float) / L - np.asarray(t, dtype=float) / T
    order_total = time_deriv + space_deriv
    if order_total == 0:
        # the offset a1 integrates exactly
        return p.a1 + _unit_integral(replace(p, a1=0.0), 0, shift, order.beta, q)
    factor = (-1.0 / T) ** time_deriv * (1.0 / L) ** space_deriv
    return factor * _unit_integral(p, order_total, shift, order.beta, q)


def continuum_time_function(
    p: WaveProfile, order: FractionalOrder, scales: ScaleParams, x: float, q: QuadratureSpec = DEFAULT_QUADRATURE
) -> TimeFunction:
    """``t -> u(x, t)`` at fixed ``x`` with its analytic time derivatives."""
    return TimeFunction(
        lambda t: continuum_u(p, order, scales, x, t, q),
        lambda t: continuum_u(p, order, scales, x, t, q, time_deriv=1),
        lambda t: continuum_u(p, order, scales, x, t, q, time_deriv=2),
    )


def kappa(order: FractionalOrder, a2: float, a3: float) -> float:
    """Diffusion coefficient that cancels the parabola's leading residual."""
    if not a3 > 0:
        raise ValueError(f"curvature a3 must be positive, got {a3}")
    s = order.s
    k = (2.0 - s) * (a2 / a3 - 1.0) - (2.0 - s) ** 2 / (3.0 - s) + 1.0
    if k <= 0:
        warnings.warn(f"kappa={k} is not positive: a2/a3={a2 / a3} is too small", RegimeWarning, stacklevel=2)
    elif a2 < 2.0 * a3:
        warnings.warn(f"curvature a3={a3} is not small next to slope a2={a2}", RegimeWarning, stacklevel=2)
    return k


def _kappa_or_default(p: WaveProfile, order: FractionalOrder, kap: float | None) -> float:
    return kappa(order, p.a2, p.a3) if kap is None else float(kap)


def scaled_residual_at_LT(
    p: WaveProfile,
    order: FractionalOrder,
    kap: float | None = None,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> ResidualReport:
    """``T**s * (L u)(L, T)`` split into its three dimensionless integrals.

    Independent of ``L``, ``c`` and ``T``. ``kap=None`` uses :func:`kappa`.
    """
    kap = _kappa_or_default(p, order, kap)
    s, beta = order.s, order.beta
    boundary = -(2.0 - s) * _unit_integral(p, 1, 1.0, beta, q)
    double = _double_integral(p, 0.0, 1.0, beta, q)
    diffusion = -kap * _unit_integral(p, 2, 0.0, beta, q)
    return ResidualReport(
        term_boundary=boundary,
        term_double=double,
        term_diffusion=diffusion,
        total=boundary + double + diffusion,
        kappa_used=kap,
        mu=p.mu,
    )


def residual_general(
    p: WaveProfile,
    order: FractionalOrder,
    kap: float | None,
    scales: ScaleParams,
    x: float,
    t: float,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """``(L u)(x, t)`` for the fractional diffusion operator with coefficient ``kap``."""
    if not t > 0:
        raise ValueError(f"evaluation time must be positive, got {t}")
    kap = _kappa_or_default(p, order, kap)
    s, beta = order.s, order.beta
    T, L = scales.T, scales.L
    tt = t / T
    xs = x / L
    boundary = -(2.0 - s) * t ** (1.0 - s) / T * _unit_integral(p, 1, xs, beta, q)
    # outer variable runs over [0, tt**(2-s)]; its beta-power is tt * w**beta
    double = T ** (-s) * tt ** (2.0 - s) * _double_integral(p, xs - tt, tt, beta, q)
    diffusion = -kap * T ** (-s) * _unit_integral(p, 2, xs - tt, beta, q)
    return boundary + double + diffusion


def caputo_of_u_crosscheck(
    p: WaveProfile,
    order: FractionalOrder,
    scales: ScaleParams,
    x: float,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> CrosscheckReport:
    """``partial^s_t u(x, T)`` assembled from the residual integrals (route a)
    and from :func:`caputo_ibp` on ``t -> u(x, t)`` (route b)."""
    s, beta = order.s, order.beta
    T, L = scales.T, scales.L
    xs = x / L
    du0 = -_unit_integral(p, 1, xs, beta, q) / T
    a = (2.0 - s) * T ** (1.0 - s) * du0 + T ** (-s) * _double_integral(p, xs - 1.0, 1.0, beta, q)
    b = caputo_ibp(continuum_time_function(p, order, scales, x, q), order, T, q)
    return CrosscheckReport(route_a=a, route_b=b, abs_diff=abs(a - b))


@dataclass(frozen=True)
class DimensionlessMap:
    """``(x, t) <-> (x/L, t/T)``."""

    scales: ScaleParams

    def forward(self, x, t):
        return x / self.scales.L, t / self.scales.T

    def inverse(self, x_tilde, t_tilde):
        return x_tilde * self.scales.L, t_tilde * self.scales.T

    def residual(
        self,
        p: WaveProfile,
        kap: float | None,
        x_tilde: float,
        t_tilde: float,
        q: QuadratureSpec = DEFAULT_QUADRATURE,
    ) -> float:
        """Residual of ``D^s u~ = kappa u~_xx`` in the rescaled variables.

        Equals ``T**s * residual_general(..., *self.inverse(x_tilde, t_tilde))``.
        """
        unit = ScaleParams(1.0, 1.0, self.scales.order)
        return residual_general(p, self.scales.order, kap, unit, x_tilde, t_tilde, q)


def dimensionless_transform(scales: ScaleParams) -> DimensionlessMap:
    return DimensionlessMap(scales)
