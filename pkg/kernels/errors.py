class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""


class NumericalError(ArithmeticError):
    """Base class of the failures that come from the numerics rather than the inputs."""


class CausticError(NumericalError):
    """The oscillator kernel diverges: sin(omega * T) is within the caustic band."""


class DegeneracyError(NumericalError):
    """A Gaussian integral over a shared endpoint does not converge."""


class DiscretizationError(NumericalError):
    """The grid cannot resolve the requested time step."""
