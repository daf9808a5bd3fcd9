from field.modes import ModeSet
from field.params import *
from kernels.errors import CausticError
from kernels.states import GaussianState, apply_to_state
from multiprocess.pool import ThreadPool
from propagator.grid import build_grid
from propagator.potentials import Harmonic
from tqdm import tqdm
from zigzag.engine import assemble_zigzag_kernel, compare, direct_kernel
from zigzag.scenario import ZigzagScenario
from zigzag.tau_map import TauMap
from dataclasses import dataclass
from typing import List, Optional, Tuple
import numpy as np


@dataclass(frozen=True)
class ModeResult:
    frequency: float
    relative_error: float
    delta_coefficient: complex
    # |zigzag factor / direct factor - 1| on the reference configuration
    factor_error: float


@dataclass(frozen=True)
class FieldAmplitudeReport:
    per_mode: List[ModeResult]
    # (frequency, reason) of the modes that could not be checked
    skipped: List[Tuple[float, str]]
    product_consistency_error: Optional[float]
    # Set when no mode could be checked, which makes the product vacuous
    flagged: bool


def mode_scenario(omega: float, schedule: TauMap) -> ZigzagScenario:
    grid = build_grid(mode_grid_n, -mode_grid_extent, mode_grid_extent)
    return ZigzagScenario(schedule, Harmonic(omega), grid)


def mode_zigzag_check(mode_frequency: float, schedule: TauMap) -> Tuple[float, complex]:
    """
    Runs the closed-form zigzag-versus-direct comparison for one field mode.

    :param mode_frequency: omega_p of the mode
    :param schedule: the turning times, shared by all modes
    :return: the relative difference between the zigzag and direct amplitudes and the measured
    coefficient of the turning block. Raises CausticError when a segment of the schedule puts
    the mode on a caustic.
    """
    report = compare(mode_scenario(mode_frequency, schedule), method="analytic")
    return report.relative_difference, report.measured_delta_phase


def _reference_factors(omega: float, schedule: TauMap):
    potential = Harmonic(omega)
    durations = schedule.segment_durations
    probe = GaussianState.normalized(reference_center, reference_width_factor / np.sqrt(omega),
                                     reference_momentum)
    zigzag = apply_to_state(assemble_zigzag_kernel(potential, durations), probe)
    direct = apply_to_state(direct_kernel(potential, durations), probe)
    return complex(zigzag.evaluate(reference_point)), complex(direct.evaluate(reference_point))


def _check_mode(job):
    omega, schedule = job
    try:
        error, coefficient = mode_zigzag_check(omega, schedule)
        zigzag, direct = _reference_factors(omega, schedule)
    except CausticError as e:
        return omega, None, str(e)
    return omega, (error, coefficient, zigzag, direct), None


def field_transition_report(modes: ModeSet, schedule: TauMap, progress=True) -> \
        FieldAmplitudeReport:
    """
    Checks every mode of the field independently, then compares the product of the per-mode
    zigzag amplitudes with the product of the direct ones on a reference product-Gaussian field
    configuration.

    :param modes: the field modes
    :param schedule: the turning times
    :param progress: show a progress bar over the modes
    """
    jobs = [(float(omega), schedule) for omega in modes.frequencies]
    with ThreadPool(mode_workers) as pool:
        results = list(tqdm(pool.imap(_check_mode, jobs), "Modes", len(jobs), unit="modes",
                            disable=not progress))

    per_mode, skipped, ratios = [], [], []
    for omega, result, reason in results:
        if result is None:
            skipped.append((omega, reason))
            continue
        error, coefficient, zigzag, direct = result
        ratio = zigzag / direct
        ratios.append(ratio)
        per_mode.append(ModeResult(omega, float(error), complex(coefficient),
                                   float(abs(ratio - 1))))

    if len(per_mode) == 0:
        return FieldAmplitudeReport([], skipped, None, True)

    # prod(zigzag) / prod(direct) - 1, accumulated in logarithms
    product_error = abs(np.expm1(np.sum(np.log(np.asarray(ratios)))))
    return FieldAmplitudeReport(per_mode, skipped, float(product_error), False)
