"""Exception types shared across the package."""


class MmwBurnError(Exception):
    """Base class for all package-specific errors."""


class FlightTimeTooSmall(MmwBurnError):
    """Observed flight-action time does not exceed the reaction time.

    The model splits the observed time into reaction plus perception; a
    non-positive perception interval leaves no exposure to evaluate.
    """


class NonPositivePower(MmwBurnError):
    """A beam power that must be strictly positive was zero or negative."""


class NoBracket(MmwBurnError):
    """A root search could not bracket a sign change on the allowed interval."""


class UnknownParameter(MmwBurnError):
    """A sweep referenced a parameter name that is not sweepable."""


class InvalidGrid(MmwBurnError):
    """A quadrature or finite-difference grid specification is unusable."""


class UnstableConfig(MmwBurnError):
    """An explicit time-stepping configuration violates its stability bound."""
