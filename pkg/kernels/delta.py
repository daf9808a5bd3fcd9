from kernels.errors import DomainError
from kernels.gaussian import AnyKernel
from kernels.params import *
from kernels.states import GaussianState, apply_to_state
from dataclasses import dataclass
from scipy.integrate import trapezoid
from typing import Sequence
import numpy as np


@dataclass(frozen=True)
class DeltaReport:
    """
    How close an operator K is to c * delta(q_out - q_in), measured on probe states.

    measured_coefficient is the best-fit c (averaged over the probes) and displacement_error the
    largest relative L2 distance between K psi and c psi.
    """
    measured_coefficient: complex
    displacement_error: float
    is_delta_like: bool
    tolerance: float

    @property
    def phase(self):
        return float(np.angle(self.measured_coefficient))

    @property
    def i_factor_offset(self):
        """Distance of the measured phase from the phase a factor i in front of the delta would
        give."""
        return abs(self.phase - i_factor_phase)


def _sampling_points(*states: GaussianState):
    lo = min(s.center - probe_sampling_span * s.width for s in states)
    hi = max(s.center + probe_sampling_span * s.width for s in states)
    return np.linspace(lo, hi, probe_sampling_points)


def displacement_error(phi: GaussianState, psi: GaussianState, c: complex) -> float:
    """
    Relative L2 distance ||phi - c psi|| / ||c psi||. The difference is taken pointwise on a
    quadrature grid rather than expanded into overlaps, which would lose half the digits to
    cancellation.
    """
    q = _sampling_points(phi, psi)
    diff = np.abs(phi.evaluate(q) - c * psi.evaluate(q)) ** 2
    ref = np.abs(c * psi.evaluate(q)) ** 2
    return float(np.sqrt(trapezoid(diff, q) / trapezoid(ref, q)))


def classify_delta(later: AnyKernel, earlier: AnyKernel, probes: Sequence[GaussianState],
                   tol: float = default_delta_tol) -> DeltaReport:
    """
    Applies earlier then later to each probe and tests whether the pair acts as a multiple of
    the identity, i.e. whether later o earlier = c * delta(q_out - q_in).

    :param later: the kernel applied second
    :param earlier: the kernel applied first
    :param probes: the probe states, at least one
    :param tol: largest displacement error for which the pair still counts as delta-like
    :return: a DeltaReport. Failures are carried by the report, never raised.
    """
    if len(probes) == 0:
        raise DomainError("classify_delta needs at least one probe state")

    coefficients, errors = [], []
    for psi in probes:
        phi = apply_to_state(later, apply_to_state(earlier, psi))
        c = psi.inner(phi) / psi.inner(psi)
        coefficients.append(c)
        errors.append(displacement_error(phi, psi, c))

    error = float(max(errors))
    return DeltaReport(
        measured_coefficient=complex(np.mean(coefficients)),
        displacement_error=error,
        is_delta_like=bool(error <= tol),
        tolerance=tol,
    )
