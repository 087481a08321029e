"""Verification studies over parameter grids.

Every runner takes a :class:`StudyConfig` and returns a :class:`Table` whose
rows are sorted by their key columns, so results do not depend on the number
of worker threads.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable

from .errors import ConfigurationError, RegimeWarning
from .fractional_core import FractionalOrder, TimeFunction, caputo_direct, caputo_ibp, gamma_fn, scaling_constant
from .limit import ScaleParams, continuum_u, kappa, residual_general, scaled_residual_at_LT
from .medium import MediumSpec, build_geometry, epsilon_upper_bound, eta_errors, lambda_sandwich_check
from .quadrature import QuadratureSpec
from .tables import Table
from .wave import TravellingWave, WaveProfile, discrete_superposition

STUDIES = (
    "geometry",
    "epsilon_sweep",
    "superpose_convergence",
    "caputo_check",
    "residual_sweep",
    "verify_pde",
)

DEFAULT_S = (0.1, 0.25, 0.5, 0.75, 0.9)
DEFAULT_N = (10, 100, 1000, 10000)
DEFAULT_MU = (0.0, 0.01, 0.02, 0.04)
CAPUTO_TIMES = (0.5, 1.0, 2.0)
CAPUTO_POWERS = (1, 2, 3)
NEIGHBORHOOD = (0.9, 1.0, 1.1)


@dataclass(frozen=True)
class StudyConfig:
    study: str
    s_values: tuple[float, ...] = DEFAULT_S
    N_values: tuple[int, ...] = DEFAULT_N
    L: float = 1.0
    c: float = 1.0
    a1: float = 0.0
    a2: float = 10.0
    a3: float = 1.0
    mu_values: tuple[float, ...] = DEFAULT_MU
    quad: QuadratureSpec = field(default_factory=QuadratureSpec)
    kappa: float | None = None
    output_path: str | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if self.study not in STUDIES:
            raise ConfigurationError(f"unknown study {self.study!r}; choose from {', '.join(STUDIES)}")
        for name in ("s_values", "N_values", "mu_values"):
            values = tuple(getattr(self, name))
            if not values:
                raise ConfigurationError(f"{name} must be a nonempty list")
            object.__setattr__(self, name, values)
        if not all(0.0 < s < 1.0 for s in self.s_values):
            raise ConfigurationError(f"every s must lie in (0, 1), got {self.s_values}")
        if not all(isinstance(n, int) and not isinstance(n, bool) and n >= 1 for n in self.N_values):
            raise ConfigurationError(f"every N must be a positive integer, got {self.N_values}")
        if not all(0.0 <= m < 1.0 for m in self.mu_values):
            raise ConfigurationError(f"every mu must lie in [0, 1), got {self.mu_values}")
        for name in ("L", "c"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ConfigurationError(f"{name} must be positive, got {v}")
        if self.workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {self.workers}")

    def profile(self, mu: float = 0.0) -> WaveProfile:
        return WaveProfile(self.a1, self.a2, self.a3, mu)


def _run_cells(cfg: StudyConfig, cells: list, fn: Callable) -> list:
    cells = sorted(cells)
    if cfg.workers == 1 or len(cells) == 1:
        return [fn(c) for c in cells]
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        return list(pool.map(fn, cells))


def _orders(cfg: StudyConfig) -> list[float]:
    return sorted(set(cfg.s_values))


def run_geometry(cfg: StudyConfig) -> Table:
    def cell(key):
        s, N = key
        spec = MediumSpec(N, cfg.L, FractionalOrder(s))
        g = build_geometry(spec)
        sandwich = lambda_sandwich_check(g) if N >= 2 else True
        return (
            N, s, spec.order.alpha, spec.order.beta, g.b_N,
            g.ell[0], g.ell[-1], g.lam[-1], abs(g.lam[-1] - cfg.L), int(sandwich),
        )

    cells = [(s, N) for s in _orders(cfg) for N in set(cfg.N_values)]
    cols = ("N", "s", "alpha", "beta", "b_N", "ell_1", "ell_N", "lambda_N", "telescoping_error", "sandwich_ok")
    return Table.from_rows(cols, _run_cells(cfg, cells, cell))


def run_epsilon_sweep(cfg: StudyConfig) -> Table:
    def cell(key):
        s, N = key
        spec = MediumSpec(N, cfg.L, FractionalOrder(s))
        rep = eta_errors(build_geometry(spec))
        ratio = rep.epsilon_N / rep.upper_bound
        return (N, s, spec.order.alpha, rep.epsilon_N, rep.upper_bound, ratio)

    cells = [(s, N) for s in _orders(cfg) for N in set(cfg.N_values)]
    cols = ("N", "s", "alpha", "epsilon_N", "upper_bound", "ratio")
    return Table.from_rows(cols, _run_cells(cfg, cells, cell))


def run_superpose_convergence(cfg: StudyConfig) -> Table:
    """Branch average versus continuum limit at ``(x, t) = (L, T)``."""

    def cell(key):
        s, N = key
        order = FractionalOrder(s)
        spec = MediumSpec(N, cfg.L, order)
        geom = build_geometry(spec)
        wave = TravellingWave(cfg.profile(), cfg.c, cfg.L)
        scales = ScaleParams(cfg.L, cfg.c, order)
        disc = discrete_superposition(wave, geom, cfg.L, scales.T)
        cont = continuum_u(wave.profile, order, scales, cfg.L, scales.T, cfg.quad)
        return (N, s, disc, cont, abs(disc - cont), eta_errors(geom).epsilon_N)

    cells = [(s, N) for s in _orders(cfg) for N in set(cfg.N_values)]
    cols = ("N", "s", "discrete", "continuum", "abs_error", "epsilon_N")
    return Table.from_rows(cols, _run_cells(cfg, cells, cell))


def run_caputo_check(cfg: StudyConfig) -> Table:
    """Both Caputo routes on monomials against the closed form."""

    def cell(key):
        s, p, t = key
        order = FractionalOrder(s)
        u = TimeFunction.monomial(p)
        direct = caputo_direct(u, order, t, cfg.quad)
        ibp = caputo_ibp(u, order, t, cfg.quad)
        exact = gamma_fn(p + 1) / gamma_fn(p + 1 - s) * t ** (p - s)
        gap = abs(ibp - scaling_constant(order) * direct)
        return (s, p, t, direct, ibp, exact, abs(direct - exact) / abs(exact), gap / (1.0 + abs(ibp)))

    cells = [(s, p, t) for s in _orders(cfg) for p in CAPUTO_POWERS for t in CAPUTO_TIMES]
    cols = ("s", "p", "t", "direct", "ibp", "exact", "direct_rel_error", "route_gap")
    return Table.from_rows(cols, _run_cells(cfg, cells, cell))


def _kappa_for(cfg: StudyConfig, order: FractionalOrder) -> float:
    if cfg.kappa is not None:
        return cfg.kappa
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        return kappa(order, cfg.a2, cfg.a3)


def run_residual_sweep(cfg: StudyConfig) -> Table:
    """Residual on a small grid around ``(L, T)``, in absolute and ``T**s`` units."""

    def cell(key):
        s, mu, xr, tr = key
        order = FractionalOrder(s)
        scales = ScaleParams(cfg.L, cfg.c, order)
        kap = _kappa_for(cfg, order)
        r = residual_general(cfg.profile(mu), order, kap, scales, xr * cfg.L, tr * scales.T, cfg.quad)
        return (s, mu, xr, tr, kap, r, scales.T**s * r)

    cells = [
        (s, mu, xr, tr)
        for s in _orders(cfg)
        for mu in set(cfg.mu_values)
        for xr in NEIGHBORHOOD
        for tr in NEIGHBORHOOD
    ]
    cols = ("s", "mu", "x_over_L", "t_over_T", "kappa", "residual", "scaled_residual")
    return Table.from_rows(cols, _run_cells(cfg, cells, cell))


def run_verify_pde(cfg: StudyConfig) -> Table:
    """Three-term residual at ``(L, T)`` per ``(s, mu)``.

    ``within_tol`` flags ``|total| <= 10 * abs_tol``; it is expected to hold
    on the ``mu = 0`` rows only.
    """
    tol = 10.0 * cfg.quad.abs_tol

    def cell(key):
        s, mu = key
        order = FractionalOrder(s)
        rep = scaled_residual_at_LT(cfg.profile(mu), order, _kappa_for(cfg, order), cfg.quad)
        return (
            s, mu, rep.kappa_used, rep.total,
            rep.term_boundary, rep.term_double, rep.term_diffusion, int(abs(rep.total) <= tol),
        )

    cells = [(s, mu) for s in _orders(cfg) for mu in set(cfg.mu_values)]
    cols = ("s", "mu", "kappa", "total", "term_boundary", "term_double", "term_diffusion", "within_tol")
    return Table.from_rows(cols, _run_cells(cfg, cells, cell))


RUNNERS: dict[str, Callable[[StudyConfig], Table]] = {
    "geometry": run_geometry,
    "epsilon_sweep": run_epsilon_sweep,
    "superpose_convergence": run_superpose_convergence,
    "caputo_check": run_caputo_check,
    "residual_sweep": run_residual_sweep,
    "verify_pde": run_verify_pde,
}


def run_study(cfg: StudyConfig) -> Table:
    return RUNNERS[cfg.study](cfg)


def with_study(cfg: StudyConfig, study: str) -> StudyConfig:
    return replace(cfg, study=study)
