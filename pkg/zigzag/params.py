## Slicing
# Grid segments are cut into ceil(duration * slices_per_unit_time) short-time slices
default_slices_per_unit_time = 1000


## Probes for the delta coefficient of the turning block
default_probe_count = 5
default_probe_seed = 0


## Number of threads used to build the independent grid segments
segment_workers = 3
