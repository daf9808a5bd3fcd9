from time import perf_counter as timer
from collections import OrderedDict
from typing import Callable
import numpy as np


class Profiler:
    """
    Accumulates the wall time spent between consecutive ticks, per stage name.
    """
    def __init__(self, disabled=False):
        self.last_tick = timer()
        self.logs = OrderedDict()
        self.disabled = disabled

    def tick(self, name):
        if self.disabled:
            return
        self.logs.setdefault(name, []).append(timer() - self.last_tick)
        self.reset_timer()

    def reset_timer(self):
        self.last_tick = timer()

    def summarize(self, log: Callable = print):
        if self.disabled or len(self.logs) == 0:
            return
        log("Time spent per stage:")
        name_msgs = ["%s (%d):" % (name, len(deltas)) for name, deltas in self.logs.items()]
        pad = max(map(len, name_msgs))
        for name_msg, deltas in zip(name_msgs, self.logs.values()):
            log("  %s  total: %8.1fms   mean: %8.1fms" %
                (name_msg.ljust(pad), np.sum(deltas) * 1000, np.mean(deltas) * 1000))
