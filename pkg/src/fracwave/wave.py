r"""Travelling profiles and their delayed superposition on the medium.

The profile is a perturbed concave parabola

.. math::

    f_o(r) = a_1 + a_2 r - \frac{a_3}{2} r^2 + \mu\,\phi(r),

and the travelling wave is :math:`f(x, t) = f_o((x - ct)/L)`, which solves
:math:`\partial_t^2 f = c^2 \partial_x^2 f` for any smooth profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConfigurationError
from .medium import MediumGeometry

__all__ = [
    "TravellingWave",
    "WaveProfile",
    "discrete_superposition",
    "profile_eval",
    "wave_equation_residual",
    "wave_eval",
]


def _neg_sin(r):
    return -np.sin(r)


@dataclass(frozen=True)
class WaveProfile:
    """Coefficients of the parabola plus a smooth bounded perturbation.

    ``phi``, ``dphi`` and ``d2phi`` must be mutually consistent and accept
    arrays; the default perturbation is ``sin``.
    """

    a1: float = 0.0
    a2: float = 10.0
    a3: float = 1.0
    mu: float = 0.0
    phi: Callable = np.sin
    dphi: Callable = np.cos
    d2phi: Callable = _neg_sin

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "mu"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
            object.__setattr__(self, name, v)
        if not 0.0 <= self.mu < 1.0:
            raise ValueError(f"perturbation size mu must lie in [0, 1), got {self.mu}")

    @property
    def is_small_curvature(self) -> bool:
        """Concave parabola whose curvature is small next to its slope."""
        return self.a2 > 0 and self.a3 > 0 and self.a2 >= 2.0 * self.a3

    def __call__(self, r, order: int = 0):
        return profile_eval(self, r, order)


def profile_eval(p: WaveProfile, r, order: int = 0):
    """``f_o`` or one of its first two derivatives; vectorized in ``r``."""
    r = np.asarray(r, dtype=float)
    if order == 0:
        out = p.a1 + p.a2 * r - 0.5 * p.a3 * r * r
        if p.mu:
            out = out + p.mu * p.phi(r)
    elif order == 1:
        out = p.a2 - p.a3 * r
        if p.mu:
            out = out + p.mu * p.dphi(r)
    elif order == 2:
        out = np.full_like(r, -p.a3)
        if p.mu:
            out = out + p.mu * p.d2phi(r)
    else:
        raise ValueError(f"derivative order must be 0, 1 or 2, got {order}")
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class TravellingWave:
    profile: WaveProfile
    c: float
    L: float

    def __post_init__(self) -> None:
        for name in ("c", "L"):
            v = float(getattr(self, name))
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive, got {v}")
            object.__setattr__(self, name, v)

    @property
    def T(self) -> float:
        return self.L / self.c


def wave_eval(w: TravellingWave, x, t):
    """``f(x, t) = f_o((x - c t) / L)``."""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    return profile_eval(w.profile, (x - w.c * t) / w.L)


def wave_equation_residual(w: TravellingWave, x: float, t: float, h: float = 1e-3) -> float:
    """Central-difference estimate of ``f_tt - c**2 f_xx`` with step ``h`` in both variables."""
    if not h > 0:
        raise ValueError(f"step h must be positive, got {h}")
    f0 = wave_eval(w, x, t)
    f_tt = (wave_eval(w, x, t + h) - 2.0 * f0 + wave_eval(w, x, t - h)) / h**2
    f_xx = (wave_eval(w, x + h, t) - 2.0 * f0 + wave_eval(w, x - h, t)) / h**2
    return float(f_tt - w.c**2 * f_xx)


def discrete_superposition(w: TravellingWave, geom: MediumGeometry, x: float, t: float) -> float:
    """Equal-weight average ``(1/N) sum_k f(x, t - lambda_{k-1}/c)`` over the branches."""
    if not math.isclose(w.L, geom.L, rel_tol=1e-12):
        raise ConfigurationError(f"wave length scale L={w.L} does not match medium L={geom.L}")
    delays = geom.lam[:-1] / w.c
    # numpy's pairwise summation fixes the reduction order
    return float(np.mean(wave_eval(w, x, t - delays)))
