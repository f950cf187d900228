"""Exception types shared across the package."""


class NlCasimirError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(NlCasimirError):
    """Invalid configuration input (unknown key, bad value, bad file)."""


class DomainError(NlCasimirError, ValueError):
    """Evaluation requested outside a model's domain of validity."""


class ModelError(NlCasimirError):
    """A model produced unphysical values (e.g. non-passive reflection)."""


class IntegrandError(NlCasimirError):
    """An integrand returned NaN; carries the offending abscissa."""

    def __init__(self, message: str, abscissa: float):
        super().__init__(f"{message} at abscissa {abscissa!r}")
        self.abscissa = abscissa


class QuadratureError(NlCasimirError):
    """Adaptive quadrature failed to converge; carries the best estimate."""

    def __init__(self, message: str, value: float, error: float):
        super().__init__(
            f"{message} (best value {value!r}, error estimate {error!r})"
        )
        self.value = value
        self.error = error


class IllConditionedError(NlCasimirError):
    """A numerically ill-conditioned ratio was requested."""
