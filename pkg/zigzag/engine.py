from kernels.delta import DeltaReport, classify_delta
from kernels.errors import CausticError, DegeneracyError, DomainError
from kernels.gaussian import AnyKernel, DeltaKernel, compose_gaussian, make_free_kernel, \
    make_oscillator_kernel, reverse_kernel
from kernels.params import default_delta_tol
from kernels.states import random_probes
from multiprocess.pool import ThreadPool
from propagator.grid import Grid
from propagator.matrices import Direction, KernelMatrix, compose_matrices, propagate_segment, \
    sample_kernel
from propagator.metrics import identity_deviation, interior_relative_difference
from propagator.potentials import Potential
from zigzag.params import *
from zigzag.scenario import ZigzagScenario
from dataclasses import dataclass
from typing import Optional, Sequence
import numpy as np

methods = ("grid", "analytic")


@dataclass(frozen=True)
class EquivalenceReport:
    """
    Zigzag amplitude K_Z against the direct amplitude. annihilation_deviation measures how far
    the turning block K_III o K_II is from delta(q_d - q_b): identity_deviation of the block on
    the grid, the DeltaReport displacement error analytically. measured_delta_phase is the
    coefficient c of K_III o K_II = c delta, when a closed-form kernel exists for the potential.
    """
    method: str
    zigzag_amplitude: KernelMatrix
    direct_amplitude: KernelMatrix
    relative_difference: float
    annihilation_deviation: float
    measured_delta_phase: Optional[complex]
    delta_report: Optional[DeltaReport] = None


## Closed-form path
def segment_kernel(potential: Potential, duration: float) -> AnyKernel:
    """
    The analytic kernel of a forward segment. Zero-duration segments are delta(q_out - q_in).
    """
    if duration == 0:
        return DeltaKernel.identity()
    if potential.kind == "free":
        return make_free_kernel(duration)
    if potential.kind == "harmonic":
        return make_oscillator_kernel(potential.omega, duration)
    raise DomainError("No closed-form kernel for a %s potential" % potential.kind)


def _analytic_segments(potential: Potential, durations: Sequence[float], reverse_middle: bool):
    first, turn_forward, turn_backward, last = durations
    if turn_forward != turn_backward:
        raise DomainError("The two turning segments must last equally long")
    k_i = segment_kernel(potential, first)
    k_ii = segment_kernel(potential, turn_forward)
    k_iii = reverse_kernel(k_ii) if reverse_middle else segment_kernel(potential, turn_backward)
    k_iv = segment_kernel(potential, last)
    return k_i, k_ii, k_iii, k_iv


def assemble_zigzag_kernel(potential: Potential, durations: Sequence[float],
                           reverse_middle: bool = True) -> AnyKernel:
    """
    K_Z = int dq_b dq_c dq_d K_IV K_III K_II K_I in closed form.

    :param durations: the tau-durations of segments I to IV. The outer ones may be zero.
    :param reverse_middle: build K_III backward, as the zigzag requires. With False, K_III runs
    forward like the other segments (negative control).
    """
    k_i, k_ii, k_iii, k_iv = _analytic_segments(potential, durations, reverse_middle)
    turn = compose_gaussian(k_iii, k_ii)
    return compose_gaussian(k_iv, compose_gaussian(turn, k_i))


def direct_kernel(potential: Potential, durations: Sequence[float]) -> AnyKernel:
    """The ordinary amplitude int dq_b K_IV K_I, with no turning block."""
    first, _, _, last = durations
    # The composition passes through a caustic when the total duration does
    if first > 0 and last > 0:
        segment_kernel(potential, first + last)
    return compose_gaussian(segment_kernel(potential, last), segment_kernel(potential, first))


def _sample(grid: Grid, kernel: AnyKernel, what: str) -> KernelMatrix:
    if isinstance(kernel, DeltaKernel):
        raise DegeneracyError("The %s amplitude is delta-supported and cannot be sampled" % what)
    return sample_kernel(grid, kernel)


def _delta_report(s: ZigzagScenario, reverse_middle=True) -> DeltaReport:
    _, k_ii, k_iii, _ = _analytic_segments(s.potential, s.tau_map.segment_durations,
                                           reverse_middle)
    probes = random_probes(s.probe_count, s.probe_seed)
    return classify_delta(k_iii, k_ii, probes, default_delta_tol)


## Grid path
def _grid_segments(s: ZigzagScenario, reverse_middle: bool):
    first, turn, _, last = s.tau_map.segment_durations
    n_first, n_turn, _, n_last = s.segment_slices
    build = lambda job: propagate_segment(s.grid, s.potential, job[0], job[1],
                                          Direction.FORWARD, s.splitting)
    with ThreadPool(segment_workers) as pool:
        k_i, k_ii, k_iv = pool.map(build, [(first, n_first), (turn, n_turn), (last, n_last)])
    k_iii = k_ii.conjugate(Direction.BACKWARD) if reverse_middle else k_ii
    return k_i, k_ii, k_iii, k_iv


def _check_method(method):
    if method not in methods:
        raise DomainError("Unknown method %r, expected one of %s" % (method, methods))


def assemble_zigzag(s: ZigzagScenario, method: str = "grid",
                    reverse_middle: bool = True) -> KernelMatrix:
    """
    The zigzag amplitude K_Z = K_IV o K_III o K_II o K_I over the segments (tau_a, tau_b),
    (tau_b, tau_c), (tau_c, tau_d) backward and (tau_d, tau_f), sampled on the scenario grid.

    :param method: "grid" for time-sliced matrices, "analytic" for closed-form kernels (free and
    harmonic potentials only)
    """
    _check_method(method)
    if method == "analytic":
        kernel = assemble_zigzag_kernel(s.potential, s.tau_map.segment_durations, reverse_middle)
        return _sample(s.grid, kernel, "zigzag")
    k_i, k_ii, k_iii, k_iv = _grid_segments(s, reverse_middle)
    return compose_matrices(k_iv, compose_matrices(compose_matrices(k_iii, k_ii), k_i))


def direct_amplitude(s: ZigzagScenario, method: str = "grid") -> KernelMatrix:
    """
    The time-ordered amplitude over t_a -> t_f, sliced like the outer segments of the zigzag.
    """
    _check_method(method)
    durations = s.tau_map.segment_durations
    if method == "analytic":
        return _sample(s.grid, direct_kernel(s.potential, durations), "direct")
    first, _, _, last = durations
    n_first, _, _, n_last = s.segment_slices
    k_i = propagate_segment(s.grid, s.potential, first, n_first, Direction.FORWARD, s.splitting)
    k_iv = propagate_segment(s.grid, s.potential, last, n_last, Direction.FORWARD, s.splitting)
    return compose_matrices(k_iv, k_i)


def compare(s: ZigzagScenario, method: str = "grid",
            reverse_middle: bool = True) -> EquivalenceReport:
    """
    Builds the zigzag and direct amplitudes and measures how far apart they are.

    :param method: "grid" or "analytic"
    :param reverse_middle: False builds K_III forward, which must break the equivalence
    :return: an EquivalenceReport. Discrepancies are reported, not raised.
    """
    _check_method(method)
    analytic_potential = s.potential.kind in ("free", "harmonic")

    if method == "analytic":
        durations = s.tau_map.segment_durations
        zigzag = _sample(s.grid, assemble_zigzag_kernel(s.potential, durations, reverse_middle),
                         "zigzag")
        direct = _sample(s.grid, direct_kernel(s.potential, durations), "direct")
        report = _delta_report(s, reverse_middle)
        annihilation = report.displacement_error
    else:
        k_i, k_ii, k_iii, k_iv = _grid_segments(s, reverse_middle)
        turn = compose_matrices(k_iii, k_ii)
        zigzag = compose_matrices(k_iv, compose_matrices(turn, k_i))
        direct = compose_matrices(k_iv, k_i)
        annihilation = identity_deviation(turn)
        report = None
        if analytic_potential:
            try:
                report = _delta_report(s, reverse_middle)
            except CausticError:
                pass

    return EquivalenceReport(
        method=method,
        zigzag_amplitude=zigzag,
        direct_amplitude=direct,
        relative_difference=interior_relative_difference(zigzag, direct),
        annihilation_deviation=float(annihilation),
        measured_delta_phase=None if report is None else report.measured_coefficient,
        delta_report=report,
    )
