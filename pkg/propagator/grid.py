from kernels.errors import DomainError
from propagator.params import *
from dataclasses import dataclass
import numpy as np


@dataclass(frozen=True)
class Grid:
    """
    n evenly spaced points covering [q_min, q_max], both ends included.
    """
    n: int
    q_min: float
    q_max: float

    @property
    def spacing(self):
        return (self.q_max - self.q_min) / (self.n - 1)

    @property
    def points(self):
        return np.linspace(self.q_min, self.q_max, self.n)

    @property
    def wavenumbers(self):
        """Angular wavenumbers of the discrete Fourier modes, in numpy's FFT order."""
        return 2 * np.pi * np.fft.fftfreq(self.n, d=self.spacing)

    @property
    def interior(self) -> slice:
        margin = int(round(self.n * (1 - interior_fraction) / 2))
        return slice(margin, self.n - margin)

    @property
    def interior_points(self):
        return self.points[self.interior]


def build_grid(n: int, q_min: float, q_max: float) -> Grid:
    """
    :param n: the number of points, at least min_grid_points (powers of two are fastest)
    :param q_min: the leftmost point
    :param q_max: the rightmost point, strictly greater than q_min
    """
    if int(n) != n or n < min_grid_points:
        raise DomainError("A grid needs an integer count of at least %d points, got %r" %
                          (min_grid_points, n))
    if not np.isfinite(q_min) or not np.isfinite(q_max) or not q_min < q_max:
        raise DomainError("Invalid grid bounds [%r, %r]" % (q_min, q_max))
    return Grid(int(n), float(q_min), float(q_max))
