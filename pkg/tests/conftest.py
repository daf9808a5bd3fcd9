from kernels.states import GaussianState
from propagator.grid import build_grid
from zigzag.tau_map import build_tau_map
import pytest


@pytest.fixture(scope="session")
def reference_grid():
    """The reference discretization: 256 points on [-10, 10]."""
    return build_grid(256, -10.0, 10.0)


@pytest.fixture(scope="session")
def reference_schedule():
    return build_tau_map(0.0, 1.0, 2.0, 3.0)


@pytest.fixture
def harmonic_packet():
    # Displaced, boosted and narrower than the omega = 1 ground state, so that it moves
    return GaussianState.normalized(0.5, 0.8, 0.3)


@pytest.fixture
def free_packet():
    # Width sqrt(3) spreads least over a total time of 3
    return GaussianState.normalized(0.0, 3 ** 0.5)
