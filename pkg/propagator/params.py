import numpy as np

## Grid
min_grid_points = 16
# Fraction of the grid (centered) that every deviation metric is restricted to. The outer
# (1 - interior_fraction) / 2 on each side is treated as a discretization artifact.
interior_fraction = 0.8
# Probe packets must carry less than this fraction of their mass outside the interior
boundary_mass_limit = 1e-6


## Time slicing
# Largest kinetic phase per slice at the band edge, eps * (pi / spacing)^2 / 2. Beyond it the
# per-slice phases of the fastest grid modes wrap around and alias.
nyquist_phase_limit = np.pi
# "symmetric": half the potential phase on each endpoint of a slice
# "endpoint": the whole potential phase on the earlier endpoint
default_splitting = "symmetric"
splittings = ("symmetric", "endpoint")
