from field.modes import build_mode_set
from field.report import FieldAmplitudeReport, field_transition_report, mode_scenario
from kernels.delta import DeltaReport
from kernels.errors import NumericalError
from kernels.params import i_factor_phase
from propagator.matrices import KernelMatrix, nyquist_ratio
from scenario.config import ScenarioConfig
from scenario.io import complex_entry, write_json, write_kernels_csv
from scenario.params import *
from utils import infolog
from utils.argutils import format_params
from utils.profiler import Profiler
from zigzag.engine import EquivalenceReport, compare
from datetime import datetime
from pathlib import Path
import numpy as np
import platform
import scipy

log = infolog.log


def versions():
    return {"python": platform.python_version(), "numpy": np.__version__,
            "scipy": scipy.__version__}


def _check(name, value, tolerance):
    if value is not None:
        value = float(value)
        if not np.isfinite(value):
            value = None
    return {"name": name, "value": value, "tolerance": tolerance,
            "passed": value is not None and value <= tolerance}


def _matrix_summary(k: KernelMatrix):
    return {
        "grid": {"n": k.grid.n, "q_min": k.grid.q_min, "q_max": k.grid.q_max,
                 "spacing": k.grid.spacing},
        "direction": k.direction.value,
        "frobenius_norm": float(np.linalg.norm(k.entries)),
        "samples": kernels_fname,
    }


def _delta_summary(report: DeltaReport):
    return {
        "measured_coefficient": complex_entry(report.measured_coefficient),
        "displacement_error": report.displacement_error,
        "is_delta_like": report.is_delta_like,
        "tolerance": report.tolerance,
        "phase": report.phase,
        # Distance of the measured phase from that of an i in front of the delta
        "i_factor_phase": i_factor_phase,
        "i_factor_offset": report.i_factor_offset,
    }


def _delta_checks(report: DeltaReport, tolerances):
    return [
        _check("delta_modulus_error", abs(abs(report.measured_coefficient) - 1),
               tolerances["delta"]),
        _check("delta_phase", abs(report.phase), tolerances["phase"]),
    ]


## Zigzag against direct
def _run_equivalence(config: ScenarioConfig, profiler: Profiler):
    scenario = config.scenario()
    method = config.mode
    tolerances = config.tolerances
    log("Comparing the zigzag and direct amplitudes (%s, %s potential%s)" %
        (method, scenario.potential.kind, ", negative control" if config.negative_control else ""))

    report: EquivalenceReport = compare(scenario, method, reverse_middle=not config.negative_control)
    profiler.tick("Build amplitudes")

    body = {
        "method": report.method,
        "negative_control": config.negative_control,
        "relative_difference": report.relative_difference,
        "annihilation_deviation": report.annihilation_deviation,
        "measured_delta_phase": None if report.measured_delta_phase is None else
            complex_entry(report.measured_delta_phase),
        "delta_report": None if report.delta_report is None else
            _delta_summary(report.delta_report),
        "zigzag_amplitude": _matrix_summary(report.zigzag_amplitude),
        "direct_amplitude": _matrix_summary(report.direct_amplitude),
    }

    if method == "grid":
        slices = scenario.segment_slices
        durations = scenario.tau_map.segment_durations
        body["segment_slices"] = list(slices)
        body["nyquist_ratio"] = max(nyquist_ratio(scenario.grid, d / n)
                                    for d, n in zip(durations, slices))
        checks = [
            _check("relative_difference", report.relative_difference, tolerances["grid"]),
            _check("annihilation_deviation", report.annihilation_deviation,
                   tolerances["annihilation"]),
        ]
    else:
        checks = [
            _check("relative_difference", report.relative_difference, tolerances["analytic"]),
            _check("annihilation_deviation", report.annihilation_deviation, tolerances["delta"]),
        ]
    if report.delta_report is not None:
        checks.extend(_delta_checks(report.delta_report, tolerances))

    kernels = [("zigzag", report.zigzag_amplitude), ("direct", report.direct_amplitude)]
    return "equivalence", body, checks, kernels


## Field sweep
def _field_summary(report: FieldAmplitudeReport, config: ScenarioConfig):
    return {
        "mass": config.mass,
        "p_max": config.p_max,
        "n_modes": config.n_modes,
        "per_mode": [{"frequency": m.frequency,
                      "relative_error": m.relative_error,
                      "delta_coefficient": complex_entry(m.delta_coefficient),
                      "factor_error": m.factor_error} for m in report.per_mode],
        "skipped": [{"frequency": omega, "reason": reason} for omega, reason in report.skipped],
        "product_consistency_error": report.product_consistency_error,
        "flagged": report.flagged,
    }


def _run_field(config: ScenarioConfig, profiler: Profiler, progress: bool):
    modes = build_mode_set(config.mass, config.p_max, config.n_modes)
    schedule = config.tau_map()
    tolerances = config.tolerances
    log("Checking %d field modes (m=%g, p_max=%g)" % (len(modes), modes.mass, config.p_max))

    report = field_transition_report(modes, schedule, progress=progress)
    profiler.tick("Mode sweep")
    for omega, reason in report.skipped:
        log("Skipped the mode omega=%.6g: %s" % (omega, reason))

    checks = [{"name": "modes_checked", "value": len(report.per_mode), "tolerance": None,
               "passed": not report.flagged}]
    if report.per_mode:
        modes_results = report.per_mode
        checks.extend([
            _check("max_mode_relative_error", max(m.relative_error for m in modes_results),
                   tolerances["field"]),
            _check("max_mode_factor_error", max(m.factor_error for m in modes_results),
                   tolerances["field"]),
            _check("max_delta_modulus_error",
                   max(abs(abs(m.delta_coefficient) - 1) for m in modes_results),
                   tolerances["delta"]),
            _check("max_delta_phase",
                   max(abs(np.angle(m.delta_coefficient)) for m in modes_results),
                   tolerances["phase"]),
        ])
    checks.append(_check("product_consistency_error", report.product_consistency_error,
                         tolerances["field"]))

    kernels = None
    if report.per_mode:
        # Kernels of the lowest mode that could be checked
        lowest = min(m.frequency for m in report.per_mode)
        mode_report = compare(mode_scenario(lowest, schedule), method="analytic")
        kernels = [("zigzag (omega=%.4g)" % lowest, mode_report.zigzag_amplitude),
                   ("direct (omega=%.4g)" % lowest, mode_report.direct_amplitude)]
        profiler.tick("Lowest mode kernels")
    return "field", _field_summary(report, config), checks, kernels


def run_scenario(config: ScenarioConfig, progress=True) -> int:
    """
    Runs a scenario and writes report.json, kernels.csv and run.log (plus kernels.png when
    plotting) to the output directory.

    :param config: a scenario config, validated here
    :param progress: show progress bars
    :return: 0 when every check is within its tolerance, 1 otherwise. Config problems raise
    ConfigError and numerical failures a NumericalError subclass.
    """
    config.validate()
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    infolog.init(out_dir.joinpath(log_fname), "zigzag %s" % config.mode)
    profiler = Profiler()

    try:
        for line in format_params(config.to_dict(), "Scenario"):
            log(line)
        if config.mode == "field":
            section, body, checks, kernels = _run_field(config, profiler, progress)
        else:
            section, body, checks, kernels = _run_equivalence(config, profiler)
        passed = all(c["passed"] for c in checks)

        report = {
            "timestamp": datetime.now().isoformat(timespec="seconds"),
            "versions": versions(),
            "config": config.to_dict(),
            "mode": config.mode,
            "checks": checks,
            "passed": passed,
            section: body,
        }
        write_json(out_dir.joinpath(report_fname), report)
        if kernels is not None:
            write_kernels_csv(out_dir.joinpath(kernels_fname), kernels[0][1], kernels[1][1])
            if config.plot:
                from utils.plot import plot_kernels
                plot_kernels(kernels, out_dir.joinpath(plot_fname), "Mode: %s" % config.mode)
        profiler.tick("Write outputs")

        for c in checks:
            log("  %-26s %-8s value: %s  tolerance: %s" %
                (c["name"], "ok" if c["passed"] else "FAILED", c["value"], c["tolerance"]))
        profiler.summarize(log)
        failed = sum(not c["passed"] for c in checks)
        log("All %d checks passed" % len(checks) if failed == 0 else
            "%d of %d checks failed" % (failed, len(checks)))
        return 0 if passed else 1
    except NumericalError as e:
        log("Numerical failure: %s" % e)
        raise
    finally:
        infolog.close()
