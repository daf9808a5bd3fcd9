from kernels.errors import DomainError, NumericalError
from scenario.config import ConfigError, ScenarioConfig, load_config
from scenario.params import modes, potential_kinds
from scenario.run import run_scenario
from utils.argutils import print_args
from pathlib import Path
import argparse
import sys


def _one_line(e: Exception):
    return " ".join(str(e).split()) or type(e).__name__


def build_parser():
    parser = argparse.ArgumentParser(
        description="Compares the transition amplitude of a trajectory that turns backward in "
                    "time (the zigzag) with the ordinary amplitude, analytically, on a grid, or "
                    "mode by mode for a free scalar field. Flags override the JSON config. "
                    "Exits with 0 when all checks pass, 1 on a tolerance failure, 2 on a "
                    "configuration error and 3 on a numerical failure.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    parser.add_argument("-c", "--config", type=Path, default=None, help= \
        "Path to a JSON scenario config. Without one, the defaults describe the harmonic "
        "scenario t = (0, 1, 2, 3), omega = 1.")
    parser.add_argument("--mode", type=str, choices=modes, default=None, help= \
        "analytic: closed-form kernels. grid: time-sliced kernel matrices. field: per-mode "
        "closed-form check of a free scalar field.")
    parser.add_argument("--potential", dest="potential_kind", type=str, choices=potential_kinds,
                        default=None, help= \
        "Potential of the particle. Polynomial coefficients can only be given in the config.")
    parser.add_argument("--omega", type=float, default=None, help= \
        "Frequency of the harmonic potential.")
    parser.add_argument("--t-a", dest="t_a", type=float, default=None, help="Start time.")
    parser.add_argument("--t-d", dest="t_d", type=float, default=None, help= \
        "Time the trajectory turns back down to.")
    parser.add_argument("--t-c", dest="t_c", type=float, default=None, help= \
        "Time at which the trajectory turns backward.")
    parser.add_argument("--t-f", dest="t_f", type=float, default=None, help="End time.")
    parser.add_argument("--grid-n", dest="grid_n", type=int, default=None, help= \
        "Number of grid points.")
    parser.add_argument("--grid-extent", dest="grid_extent", type=float, default=None, help= \
        "The grid covers [-extent, extent].")
    parser.add_argument("--slices", dest="slices_per_unit_time", type=int, default=None, help= \
        "Number of short-time slices per unit of time in grid mode.")
    parser.add_argument("--mass", type=float, default=None, help="Field mass (field mode).")
    parser.add_argument("--p-max", dest="p_max", type=float, default=None, help= \
        "Largest field momentum kept (field mode).")
    parser.add_argument("--n-modes", dest="n_modes", type=int, default=None, help= \
        "Number of field modes (field mode).")
    parser.add_argument("--probes", type=int, default=None, help= \
        "Number of random Gaussian probes used to measure the turning block.")
    parser.add_argument("--seed", type=int, default=None, help= \
        "Seed of the probe generator.")
    parser.add_argument("-o", "--out", dest="output_dir", type=str, default=None, help= \
        "Output directory for report.json, kernels.csv and run.log.")
    parser.add_argument("--negative-control", dest="negative_control", action="store_const",
                        const=True, default=None, help= \
        "Run the third segment forward instead of backward. The equivalence must then fail.")
    parser.add_argument("--plot", action="store_const", const=True, default=None, help= \
        "Also draw the kernel moduli to kernels.png.")
    parser.add_argument("--no-progress", dest="no_progress", action="store_true", help= \
        "Hide progress bars.")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    # Process the arguments
    overrides = {k: v for k, v in vars(args).items() if k not in ("config", "no_progress")}
    try:
        config = load_config(args.config) if args.config is not None else ScenarioConfig()
        config = config.with_overrides(**overrides).validate()
    except (ConfigError, DomainError) as e:
        print("Configuration error: %s" % _one_line(e), file=sys.stderr)
        return 2

    # Run the scenario
    print_args(args, parser)
    try:
        return run_scenario(config, progress=not args.no_progress)
    except (ConfigError, DomainError) as e:
        print("Configuration error: %s" % _one_line(e), file=sys.stderr)
        return 2
    except NumericalError as e:
        print("Numerical error: %s" % _one_line(e), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
