from kernels.errors import DomainError
from propagator.grid import Grid
from propagator.params import default_splitting
from propagator.potentials import Potential
from zigzag.params import *
from zigzag.tau_map import TauMap
from dataclasses import dataclass
import numpy as np


@dataclass(frozen=True)
class ZigzagScenario:
    """
    Everything needed to build the zigzag amplitude K_Z and the direct amplitude it is compared
    with: the turning times, the potential, and the discretization.
    """
    tau_map: TauMap
    potential: Potential
    grid: Grid
    slices_per_unit_time: int = default_slices_per_unit_time
    splitting: str = default_splitting
    probe_count: int = default_probe_count
    probe_seed: int = default_probe_seed

    def __post_init__(self):
        if int(self.slices_per_unit_time) != self.slices_per_unit_time or \
                self.slices_per_unit_time < 1:
            raise DomainError("slices_per_unit_time must be a positive integer, got %r" %
                              self.slices_per_unit_time)
        if int(self.probe_count) != self.probe_count or self.probe_count < 1:
            raise DomainError("At least one probe state is needed, got %r" % self.probe_count)
        durations = self.tau_map.segment_durations
        if not all(d > 0 for d in durations):
            raise DomainError("Every segment needs a positive duration, got %s" % (durations,))
        if durations[1] != durations[2]:
            raise DomainError("The two turning segments must last equally long")

    def slices_for(self, duration: float) -> int:
        # Rounded before the ceiling so that 2.0000000000000004 units give 2 units of slices
        return max(1, int(np.ceil(np.round(duration * self.slices_per_unit_time, 9))))

    @property
    def segment_slices(self):
        return tuple(self.slices_for(d) for d in self.tau_map.segment_durations)
