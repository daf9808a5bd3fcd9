from zigzag.tau_map import TauMap, build_tau_map
from zigzag.scenario import ZigzagScenario
from zigzag.engine import EquivalenceReport, segment_kernel, assemble_zigzag_kernel, \
    direct_kernel, assemble_zigzag, direct_amplitude, compare
