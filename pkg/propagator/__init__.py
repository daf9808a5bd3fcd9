from propagator.grid import Grid, build_grid
from propagator.potentials import Potential, Free, Harmonic, Custom, polynomial_potential
from propagator.matrices import Direction, KernelMatrix, identity_kernel, nyquist_ratio, \
    short_time_forward, short_time_backward, compose_matrices, propagate_segment, sample_kernel
from propagator.metrics import identity_deviation, unitarity_deviation, \
    interior_relative_difference, sample_state, apply_matrix, relative_l2, boundary_mass
