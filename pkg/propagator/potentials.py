from kernels.errors import DomainError
from dataclasses import dataclass, field
from typing import Callable
import numpy as np


class Potential:
    """
    A real potential V(q). The kind tag tells analytic code paths (which only exist for the
    free particle and the oscillator) apart from arbitrary potentials.
    """
    kind = None

    def __call__(self, q):
        raise NotImplementedError()

    def on_grid(self, grid):
        values = np.asarray(self(grid.points), dtype=np.float64)
        if values.shape != (grid.n,):
            values = np.broadcast_to(values, (grid.n,)).copy()
        if not np.all(np.isfinite(values)):
            raise DomainError("%s is not finite on [%g, %g]" % (self, grid.q_min, grid.q_max))
        return values


@dataclass(frozen=True)
class Free(Potential):
    kind = "free"

    def __call__(self, q):
        return np.zeros_like(np.asarray(q, dtype=np.float64))


@dataclass(frozen=True)
class Harmonic(Potential):
    omega: float
    kind = "harmonic"

    def __post_init__(self):
        if not self.omega > 0:
            raise DomainError("Harmonic frequency must be positive, got %r" % self.omega)

    def __call__(self, q):
        q = np.asarray(q, dtype=np.float64)
        return 0.5 * self.omega ** 2 * q ** 2


@dataclass(frozen=True)
class Custom(Potential):
    function: Callable = field(compare=False)
    name: str = "custom"
    kind = "custom"

    def __call__(self, q):
        return self.function(np.asarray(q, dtype=np.float64))


def polynomial_potential(coefficients) -> Custom:
    """
    V(q) = sum_k coefficients[k] q^k, the form arbitrary potentials take in scenario configs.
    """
    coefficients = [float(c) for c in coefficients]
    if len(coefficients) == 0:
        raise DomainError("A polynomial potential needs at least one coefficient")
    poly = np.polynomial.Polynomial(coefficients)
    return Custom(poly, "polynomial%s" % coefficients)
