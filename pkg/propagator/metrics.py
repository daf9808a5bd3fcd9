from kernels.states import GaussianState
from propagator.grid import Grid
from propagator.matrices import KernelMatrix
import numpy as np


def _interior_identity_distance(grid: Grid, operator) -> float:
    inner = grid.interior
    block = operator[inner, inner]
    eye = np.eye(block.shape[0])
    return float(np.linalg.norm(block - eye) / np.linalg.norm(eye))


def identity_deviation(k: KernelMatrix) -> float:
    """
    Distance of k from delta(q_out - q_in), i.e. ||spacing * k - I||_F / ||I||_F on the interior
    block of the grid.
    """
    return _interior_identity_distance(k.grid, k.measure_weight * k.entries)


def unitarity_deviation(k: KernelMatrix) -> float:
    """
    ||spacing^2 * k^H k - I||_F / ||I||_F on the interior block of the grid.
    """
    operator = k.measure_weight * k.entries
    return _interior_identity_distance(k.grid, operator.conj().T @ operator)


def interior_relative_difference(a: KernelMatrix, b: KernelMatrix) -> float:
    """||a - b||_F / ||b||_F over the interior block, b being the reference."""
    inner = a.grid.interior
    ref = np.linalg.norm(b.entries[inner, inner])
    return float(np.linalg.norm(a.entries[inner, inner] - b.entries[inner, inner]) / ref)


## Wave packets on the grid
def sample_state(grid: Grid, psi: GaussianState):
    return psi.evaluate(grid.points)


def apply_matrix(k: KernelMatrix, samples):
    return k.measure_weight * (k.entries @ samples)


def l2_norm(grid: Grid, samples) -> float:
    return float(np.sqrt(grid.spacing * np.sum(np.abs(samples) ** 2)))


def relative_l2(grid: Grid, samples, reference) -> float:
    return l2_norm(grid, samples - reference) / l2_norm(grid, reference)


def boundary_mass(grid: Grid, samples) -> float:
    """Fraction of the packet's mass lying outside the interior of the grid."""
    mass = np.abs(samples) ** 2
    return float(1 - np.sum(mass[grid.interior]) / np.sum(mass))
