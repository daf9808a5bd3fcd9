from kernels.errors import DiscretizationError, DomainError
from kernels.gaussian import make_free_kernel, make_oscillator_kernel
from kernels.states import GaussianState, apply_to_state
from propagator.grid import build_grid
from propagator.matrices import Direction, KernelMatrix, compose_matrices, identity_kernel, \
    nyquist_ratio, propagate_segment, sample_kernel, short_time_backward, short_time_forward
from propagator.metrics import apply_matrix, boundary_mass, identity_deviation, \
    interior_relative_difference, relative_l2, sample_state, unitarity_deviation
from propagator.potentials import Free, Harmonic, polynomial_potential
import numpy as np
import pytest

eps = 1e-3


@pytest.fixture(scope="module")
def harmonic_segment(reference_grid):
    return propagate_segment(reference_grid, Harmonic(1.0), 1.0, 1000)


class TestShortTime:
    def test_nyquist_ratio(self, reference_grid):
        assert nyquist_ratio(reference_grid, eps) == pytest.approx(0.8022, rel=1e-3)

    def test_nyquist_guard(self, reference_grid):
        with pytest.raises(DiscretizationError, match="ratio"):
            short_time_forward(reference_grid, Free(), 0.01)

    @pytest.mark.parametrize("step, splitting", ((0.0, "symmetric"), (-eps, "symmetric"),
                                                 (eps, "midpoint")))
    def test_rejected(self, reference_grid, step, splitting):
        with pytest.raises(DomainError):
            short_time_forward(reference_grid, Free(), step, splitting)

    def test_free_translation_invariance(self, reference_grid):
        k = short_time_forward(reference_grid, Free(), eps).entries
        # Circulant: entries depend only on (j - k) mod n
        np.testing.assert_allclose(k[1:, 1:], k[:-1, :-1], rtol=0, atol=1e-12 * np.abs(k).max())
        np.testing.assert_allclose(k, k.T, rtol=0, atol=1e-15 * np.abs(k).max())

    def test_harmonic_dresses_free(self, reference_grid):
        q = reference_grid.points
        free = short_time_forward(reference_grid, Free(), eps).entries
        harmonic = short_time_forward(reference_grid, Harmonic(1.0), eps).entries
        half = np.exp(-0.25j * eps * q ** 2)
        np.testing.assert_allclose(harmonic, half[:, None] * free * half[None, :], rtol=0,
                                   atol=1e-13 * np.abs(free).max())

    def test_endpoint_splitting(self, reference_grid):
        q = reference_grid.points
        free = short_time_forward(reference_grid, Free(), eps).entries
        harmonic = short_time_forward(reference_grid, Harmonic(1.0), eps, "endpoint").entries
        np.testing.assert_allclose(harmonic, free * np.exp(-0.5j * eps * q ** 2)[None, :],
                                   rtol=0, atol=1e-13 * np.abs(free).max())

    @pytest.mark.parametrize("splitting", ("symmetric", "endpoint"))
    def test_unitarity(self, reference_grid, splitting):
        k = short_time_forward(reference_grid, Harmonic(1.0), eps, splitting)
        assert unitarity_deviation(k) <= 1e-10
        assert unitarity_deviation(short_time_forward(reference_grid, Free(), eps)) <= 1e-2

    def test_backward_is_conjugate(self, reference_grid):
        v = polynomial_potential([0.0, 0.2, 0.5, 0.0, 0.01])
        forward = short_time_forward(reference_grid, v, eps)
        backward = short_time_backward(reference_grid, v, eps)
        np.testing.assert_array_equal(backward.entries, np.conj(forward.entries))
        assert backward.direction == Direction.BACKWARD

    def test_annihilation(self, reference_grid):
        v = Harmonic(1.0)
        pair = compose_matrices(short_time_backward(reference_grid, v, eps),
                                short_time_forward(reference_grid, v, eps))
        assert identity_deviation(pair) <= 1e-10
        # Mass of each column off the diagonal
        operator = np.abs(pair.operator) ** 2
        off_diagonal = operator.sum(axis=0) - np.diag(operator)
        assert np.max(off_diagonal[reference_grid.interior]) <= 1e-3
        assert pair.direction == Direction.MIXED

    def test_endpoint_annihilation_is_approximate(self, reference_grid):
        v = Harmonic(1.0)
        forward = short_time_forward(reference_grid, v, eps, "endpoint")
        pair = compose_matrices(forward.conjugate(), forward)
        assert identity_deviation(pair) > 1e-8


class TestCompose:
    def test_identity(self, reference_grid):
        k = short_time_forward(reference_grid, Harmonic(1.0), eps)
        np.testing.assert_allclose(compose_matrices(k, identity_kernel(reference_grid)).entries,
                                   k.entries, rtol=1e-14, atol=0)

    def test_associative(self, reference_grid):
        a = short_time_forward(reference_grid, Harmonic(1.0), eps)
        b = short_time_backward(reference_grid, polynomial_potential([0, 1.0]), 2 * eps)
        c = short_time_forward(reference_grid, Free(), 0.5 * eps, "endpoint")
        left = compose_matrices(compose_matrices(a, b), c).entries
        right = compose_matrices(a, compose_matrices(b, c)).entries
        assert np.linalg.norm(left - right) / np.linalg.norm(right) <= 1e-12

    def test_grid_mismatch(self, reference_grid):
        other = build_grid(256, -8.0, 8.0)
        with pytest.raises(DomainError):
            compose_matrices(identity_kernel(reference_grid), identity_kernel(other))

    def test_entries_checked(self, reference_grid):
        with pytest.raises(DomainError):
            KernelMatrix(reference_grid, np.zeros((3, 3), dtype=complex), 1.0, Direction.FORWARD)
        entries = np.zeros((256, 256), dtype=complex)
        entries[0, 0] = np.nan
        with pytest.raises(DiscretizationError):
            KernelMatrix(reference_grid, entries, 1.0, Direction.FORWARD)


class TestSegments:
    def test_single_slice(self, reference_grid):
        v = Harmonic(1.0)
        np.testing.assert_array_equal(propagate_segment(reference_grid, v, eps, 1).entries,
                                      short_time_forward(reference_grid, v, eps).entries)

    def test_squaring_matches_sequential(self, reference_grid):
        v = Harmonic(1.0)
        step = short_time_forward(reference_grid, v, eps)
        sequential = step
        for _ in range(4):
            sequential = compose_matrices(step, sequential)
        segment = propagate_segment(reference_grid, v, 5 * eps, 5)
        np.testing.assert_allclose(segment.entries, sequential.entries, rtol=0,
                                   atol=1e-12 * np.abs(sequential.entries).max())

    def test_backward_segment(self, reference_grid, harmonic_segment):
        backward = propagate_segment(reference_grid, Harmonic(1.0), 1.0, 1000,
                                     Direction.BACKWARD)
        np.testing.assert_array_equal(backward.entries, np.conj(harmonic_segment.entries))

    @pytest.mark.parametrize("duration, slices", ((1.0, 0), (1.0, 2.5), (0.0, 10)))
    def test_rejected(self, reference_grid, duration, slices):
        with pytest.raises(DomainError):
            propagate_segment(reference_grid, Free(), duration, slices)

    def test_mixed_direction_rejected(self, reference_grid):
        with pytest.raises(DomainError):
            propagate_segment(reference_grid, Free(), 1.0, 10, Direction.MIXED)

    def test_oscillator_fidelity(self, reference_grid, harmonic_segment, harmonic_packet):
        samples = sample_state(reference_grid, harmonic_packet)
        assert boundary_mass(reference_grid, samples) < 1e-6
        propagated = apply_matrix(harmonic_segment, samples)
        exact = apply_to_state(make_oscillator_kernel(1.0, 1.0), harmonic_packet)
        assert relative_l2(reference_grid, propagated, sample_state(reference_grid, exact)) \
               <= 1e-2

    def test_free_fidelity(self, reference_grid, free_packet):
        segment = propagate_segment(reference_grid, Free(), 1.0, 1000)
        samples = sample_state(reference_grid, free_packet)
        assert boundary_mass(reference_grid, samples) < 1e-6
        exact = apply_to_state(make_free_kernel(1.0), free_packet)
        assert relative_l2(reference_grid, apply_matrix(segment, samples),
                           sample_state(reference_grid, exact)) <= 1e-2

    def test_annihilation(self, reference_grid, harmonic_segment):
        backward = harmonic_segment.conjugate()
        assert backward.direction == Direction.BACKWARD
        assert identity_deviation(compose_matrices(backward, harmonic_segment)) <= 1e-2

    @pytest.mark.parametrize("v", (Free(), Harmonic(1.0)), ids=("free", "harmonic"))
    def test_annihilation_at_every_scale(self, reference_grid, v):
        deviations = []
        for slices in (1, 10, 100, 1000):
            forward = propagate_segment(reference_grid, v, slices * eps, slices)
            deviations.append(identity_deviation(compose_matrices(forward.conjugate(), forward)))
        assert all(d <= 2 * deviations[0] + 1e-12 for d in deviations)
        assert max(deviations) <= 1e-9

    def test_propagation_moves_mass(self, harmonic_segment):
        assert identity_deviation(harmonic_segment) >= 0.5


class TestMetrics:
    def test_identity(self, reference_grid):
        assert identity_deviation(identity_kernel(reference_grid)) == pytest.approx(0, abs=1e-15)
        assert unitarity_deviation(identity_kernel(reference_grid)) == pytest.approx(0, abs=1e-15)

    def test_zero_operator(self, reference_grid):
        zero = KernelMatrix(reference_grid, np.zeros((256, 256), dtype=complex),
                            reference_grid.spacing, Direction.FORWARD)
        assert unitarity_deviation(zero) == 1
        assert identity_deviation(zero) == 1

    def test_relative_difference(self, reference_grid):
        k = sample_kernel(reference_grid, make_free_kernel(1.0))
        assert interior_relative_difference(k, k) == 0
        doubled = KernelMatrix(reference_grid, 2 * k.entries, k.measure_weight, k.direction)
        assert interior_relative_difference(doubled, k) == pytest.approx(1.0)

    def test_boundary_mass(self, reference_grid):
        edge = sample_state(reference_grid, GaussianState.normalized(9.0, 0.5))
        assert boundary_mass(reference_grid, edge) > 0.5
        centered = sample_state(reference_grid, GaussianState.normalized(0.0, 1.0))
        assert boundary_mass(reference_grid, centered) < 1e-6
