from kernels.errors import DiscretizationError, DomainError
from kernels.gaussian import ComplexGaussianKernel
from propagator.grid import Grid
from propagator.params import *
from propagator.potentials import Potential
from dataclasses import dataclass
from enum import Enum
import numpy as np


class Direction(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"
    # Products of forward and backward segments
    MIXED = "mixed"


@dataclass(frozen=True, eq=False)
class KernelMatrix:
    """
    A kernel K(q_j, q_k) sampled on a grid, rows indexing q_out and columns q_in. Integrals over
    an endpoint are rectangle sums, so the operator acting on samples psi_k is
    measure_weight * K @ psi and the identity operator is the identity matrix / spacing.
    """
    grid: Grid
    entries: np.ndarray
    measure_weight: float
    direction: Direction

    def __post_init__(self):
        if self.entries.shape != (self.grid.n, self.grid.n):
            raise DomainError("Kernel entries of shape %s do not match a %d-point grid" %
                              (self.entries.shape, self.grid.n))
        if not np.all(np.isfinite(self.entries)):
            raise DiscretizationError("Kernel matrix has non-finite entries")
        self.entries.flags.writeable = False

    @property
    def operator(self):
        """The matrix acting on grid samples: measure_weight * entries."""
        return self.measure_weight * self.entries

    def conjugate(self, direction=None):
        if direction is None:
            direction = {Direction.FORWARD: Direction.BACKWARD,
                         Direction.BACKWARD: Direction.FORWARD}.get(self.direction,
                                                                    Direction.MIXED)
        return KernelMatrix(self.grid, np.conj(self.entries), self.measure_weight, direction)


def _from_operator(grid: Grid, operator, direction: Direction) -> KernelMatrix:
    return KernelMatrix(grid, np.asarray(operator, dtype=np.complex128) / grid.spacing,
                        grid.spacing, direction)


def identity_kernel(grid: Grid) -> KernelMatrix:
    """delta(q_out - q_in) on the grid: the identity matrix divided by the spacing."""
    return _from_operator(grid, np.eye(grid.n), Direction.FORWARD)


def nyquist_ratio(grid: Grid, eps: float) -> float:
    """The kinetic phase per slice of the fastest grid mode, eps * (pi / spacing)^2 / 2."""
    return eps * (np.pi / grid.spacing) ** 2 / 2


def _free_kinetic_operator(grid: Grid, eps: float):
    # The band-limited free propagator is the circulant whose generator is the inverse DFT of
    # exp(-i eps k^2 / 2). The generator is symmetrized so that the matrix is exactly symmetric.
    generator = np.fft.ifft(np.exp(-0.5j * eps * grid.wavenumbers ** 2))
    generator = 0.5 * (generator + np.roll(generator[::-1], 1))
    index = np.arange(grid.n)
    return generator[(index[:, None] - index[None, :]) % grid.n]


def short_time_forward(grid: Grid, v: Potential, eps: float,
                       splitting: str = default_splitting) -> KernelMatrix:
    """
    The short-time kernel (2 pi i eps)^{-1/2} exp(i (q_j - q_k)^2 / (2 eps) - i eps V) on the
    grid. The kinetic factor is taken in its band-limited form, which is exactly unitary on the
    grid; the potential phase goes half on each endpoint ("symmetric") or whole on the earlier
    endpoint q_k ("endpoint").

    :param grid: the spatial grid
    :param v: the potential
    :param eps: the time step, strictly positive
    :param splitting: one of params.splittings
    """
    if not eps > 0:
        raise DomainError("The time step must be positive, got %r" % eps)
    if splitting not in splittings:
        raise DomainError("Unknown splitting %r, expected one of %s" % (splitting, splittings))
    ratio = nyquist_ratio(grid, eps)
    if ratio > nyquist_phase_limit:
        raise DiscretizationError(
            "Time step %g is too coarse for spacing %g: band-edge phase ratio %.4g exceeds %.4g"
            % (eps, grid.spacing, ratio, nyquist_phase_limit))

    kinetic = _free_kinetic_operator(grid, eps)
    potential = v.on_grid(grid)
    if splitting == "symmetric":
        half = np.exp(-0.5j * eps * potential)
        operator = half[:, None] * kinetic * half[None, :]
    else:
        operator = kinetic * np.exp(-1j * eps * potential)[None, :]
    return _from_operator(grid, operator, Direction.FORWARD)


def short_time_backward(grid: Grid, v: Potential, eps: float,
                        splitting: str = default_splitting) -> KernelMatrix:
    """
    The backward short-time kernel, carrying exp(-iS): the elementwise complex conjugate of
    short_time_forward for the same (real) potential.
    """
    return short_time_forward(grid, v, eps, splitting).conjugate(Direction.BACKWARD)


def compose_matrices(later: KernelMatrix, earlier: KernelMatrix) -> KernelMatrix:
    """
    int dq_c later(q_out, q_c) earlier(q_c, q_in) as a rectangle sum over the grid:
    spacing * later @ earlier.
    """
    if later.grid != earlier.grid:
        raise DomainError("Cannot compose kernels on different grids (%s, %s)" %
                          (later.grid, earlier.grid))
    direction = later.direction if later.direction == earlier.direction else Direction.MIXED
    entries = later.measure_weight * (later.entries @ earlier.entries)
    return KernelMatrix(later.grid, entries, later.measure_weight, direction)


def propagate_segment(grid: Grid, v: Potential, duration: float, slices: int,
                      direction: Direction = Direction.FORWARD,
                      splitting: str = default_splitting) -> KernelMatrix:
    """
    A finite-duration segment as the composition of `slices` short-time kernels with
    eps = duration / slices. The composition runs by repeated squaring, which gives the same
    product as composing slice by slice.

    :param direction: FORWARD, or BACKWARD for the conjugated segment
    """
    if int(slices) != slices or slices < 1:
        raise DomainError("A segment needs at least one slice, got %r" % slices)
    if not duration > 0:
        raise DomainError("Segment duration must be positive, got %r" % duration)
    if direction not in (Direction.FORWARD, Direction.BACKWARD):
        raise DomainError("A segment runs either forward or backward, got %s" % direction)

    step = short_time_forward(grid, v, duration / slices, splitting)
    segment, power, remaining = None, step, int(slices)
    while remaining:
        if remaining & 1:
            segment = power if segment is None else compose_matrices(power, segment)
        remaining >>= 1
        if remaining:
            power = compose_matrices(power, power)

    if direction == Direction.BACKWARD:
        return segment.conjugate(Direction.BACKWARD)
    return segment


def sample_kernel(grid: Grid, kernel: ComplexGaussianKernel,
                  direction: Direction = Direction.FORWARD) -> KernelMatrix:
    """Samples an analytic kernel at every pair of grid points."""
    q = grid.points
    entries = kernel.evaluate(q[:, None], q[None, :])
    return KernelMatrix(grid, np.asarray(entries, dtype=np.complex128), grid.spacing, direction)
