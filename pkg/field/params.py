## Sampling grid of the per-mode analytic comparison
mode_grid_n = 64
mode_grid_extent = 4.0


## Reference product-Gaussian field configuration
# Each mode is probed with a packet of width reference_width_factor / sqrt(omega_p) (the
# ground-state width scaled), displaced by reference_center and boosted by reference_momentum,
# and its propagated amplitude is read at reference_point.
reference_center = 0.4
reference_width_factor = 1.3
reference_momentum = 0.2
reference_point = 0.25


## Sweeps
mode_workers = 4
