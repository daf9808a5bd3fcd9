import numpy as np

## Kernel construction
# Oscillator kernels with |sin(omega * T)| below this value are rejected as caustics
caustic_band = 1e-6
# Shared-endpoint quadratic coefficients below this value (relative to the coefficients that
# produced them) make a composition delta-degenerate
degeneracy_tol = 1e-10


## Probe states
# Random probes are drawn uniformly from these ranges
probe_center_range = (-1.5, 1.5)
probe_width_range = (0.5, 1.2)
probe_momentum_range = (-1.0, 1.0)
# Probes are sampled over center +- probe_sampling_span widths for L2 distances
probe_sampling_span = 10.0
probe_sampling_points = 4001


## Delta classification
default_delta_tol = 1e-8
# Phase of the coefficient that the annihilation identity would carry with an extra factor i
i_factor_phase = np.pi / 2
