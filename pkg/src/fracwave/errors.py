"""Exception and warning types shared across the package."""


class ConfigurationError(ValueError):
    """Inputs that are individually valid but inconsistent with each other."""


class RegimeWarning(UserWarning):
    """Parameters outside the regime where the derivation is meaningful."""
