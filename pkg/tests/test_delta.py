from kernels.delta import classify_delta, displacement_error
from kernels.errors import DomainError
from kernels.gaussian import DeltaKernel, make_free_kernel, make_oscillator_kernel, \
    reverse_kernel
from kernels.params import i_factor_phase
from kernels.states import GaussianState, random_probes
import numpy as np
import pytest


@pytest.fixture
def probes():
    return random_probes(5, seed=0)


@pytest.mark.parametrize("duration", (0.3, 1.0, 2.7))
def test_annihilation_identity(probes, duration):
    k = make_oscillator_kernel(1.0, duration)
    report = classify_delta(reverse_kernel(k), k, probes, tol=1e-8)
    assert report.is_delta_like
    assert abs(abs(report.measured_coefficient) - 1) <= 1e-8
    assert report.displacement_error <= 1e-10
    # The coefficient is 1, not i
    assert abs(report.phase) <= 1e-6
    assert report.i_factor_offset == pytest.approx(i_factor_phase, abs=1e-6)


def test_free_pair(probes):
    k = make_free_kernel(2.0)
    report = classify_delta(reverse_kernel(k), k, probes, tol=1e-8)
    assert report.is_delta_like
    assert report.measured_coefficient == pytest.approx(1.0, abs=1e-10)


def test_genuine_propagation(probes):
    k = make_oscillator_kernel(1.0, 0.5)
    report = classify_delta(k, k, probes, tol=1e-8)
    assert not report.is_delta_like
    assert report.displacement_error > 0.1


def test_chirped_delta_is_not_delta_like(probes):
    report = classify_delta(DeltaKernel(1.0, 1.0, 0.5), DeltaKernel.identity(), probes)
    assert not report.is_delta_like


def test_scaled_identity(probes):
    report = classify_delta(DeltaKernel(1j), DeltaKernel.identity(), probes)
    assert report.is_delta_like
    assert report.measured_coefficient == pytest.approx(1j, abs=1e-14)
    assert report.i_factor_offset == pytest.approx(0.0, abs=1e-12)


def test_displacement_error():
    psi = GaussianState.normalized(0.0, 1.0)
    assert displacement_error(psi.scaled(2.0), psi, 2.0) == pytest.approx(0.0, abs=1e-14)
    moved = GaussianState.normalized(0.1, 1.0)
    # ||psi(. - d) - psi|| = sqrt(2 - 2 exp(-d^2 / 4)) for a unit-width packet
    assert displacement_error(moved, psi, 1.0) == \
           pytest.approx(np.sqrt(2 - 2 * np.exp(-0.01 / 4)), rel=1e-6)


def test_needs_probes():
    k = make_free_kernel(1.0)
    with pytest.raises(DomainError):
        classify_delta(reverse_kernel(k), k, [])
