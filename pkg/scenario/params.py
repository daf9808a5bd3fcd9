## Defaults of a scenario run, overridden by the JSON config, then by command-line flags
modes = ("analytic", "grid", "field")
potential_kinds = ("free", "harmonic", "polynomial")

default_mode = "analytic"
default_potential = {"kind": "harmonic", "omega": 1.0}
default_times = {"t_a": 0.0, "t_d": 1.0, "t_c": 2.0, "t_f": 3.0}
default_grid = {"n": 256, "extent": 10.0}
default_slices_per_unit_time = 1000
default_field = {"mass": 1.0, "p_max": 3.0, "n_modes": 10}
default_output_dir = "zigzag_output"
default_seed = 0
default_probes = 5

default_tolerances = {
    # zigzag against direct amplitude, closed-form kernels
    "analytic": 1e-10,
    # zigzag against direct amplitude, time-sliced grid
    "grid": 2e-2,
    # identity deviation of the turning block on the grid
    "annihilation": 1e-2,
    # |c| - 1 and displacement error of the turning block, closed-form kernels
    "delta": 1e-8,
    # phase of the turning block coefficient
    "phase": 1e-6,
    # per-mode and product errors of a field sweep
    "field": 1e-9,
}


## Outputs
report_fname = "report.json"
kernels_fname = "kernels.csv"
plot_fname = "kernels.png"
log_fname = "run.log"
# kernels.csv samples at most this many grid points along each axis
csv_max_points = 64
