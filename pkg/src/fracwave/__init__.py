"""Time-fractional diffusion from delayed travelling waves on a ramified medium."""

__version__ = "0.1.0"

from .errors import ConfigurationError, RegimeWarning
from .fractional_core import (
    FractionalOrder,
    TimeFunction,
    caputo_direct,
    caputo_ibp,
    gamma_fn,
    scaling_constant,
)
from .limit import (
    CrosscheckReport,
    DimensionlessMap,
    ResidualReport,
    ScaleParams,
    caputo_of_u_crosscheck,
    continuum_time_function,
    continuum_u,
    dimensionless_transform,
    kappa,
    residual_general,
    scaled_residual_at_LT,
)
from .medium import (
    DelayErrorReport,
    MediumGeometry,
    MediumSpec,
    build_geometry,
    epsilon_sweep,
    epsilon_upper_bound,
    eta_errors,
    lambda_sandwich_check,
)
from .quadrature import QuadratureSpec, Scheme, integrate, integrate_powered
from .wave import (
    TravellingWave,
    WaveProfile,
    discrete_superposition,
    profile_eval,
    wave_equation_residual,
    wave_eval,
)
