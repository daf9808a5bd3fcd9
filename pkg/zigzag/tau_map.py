from kernels.errors import DomainError
from dataclasses import dataclass
import numpy as np


@dataclass(frozen=True)
class TauMap:
    """
    Parametrization t(tau) of a trajectory with one time zigzag. The particle runs forward from
    t_a to t_c, turns back down to t_d, and runs forward again up to t_f:

        t = tau                      for tau <= tau_c
        t = 2 tau_c - tau            for tau_c < tau <= tau_d
        t = tau + 2 (tau_c - tau_d)  for tau > tau_d

    tau_b is the parameter value at which the forward branch first passes t_d, so that
    t(tau_b) = t(tau_d) = t_d.
    """
    t_a: float
    t_d: float
    t_c: float
    t_f: float

    @property
    def tau_a(self):
        return self.t_a

    @property
    def tau_b(self):
        return self.t_d

    @property
    def tau_c(self):
        return self.t_c

    @property
    def tau_d(self):
        return 2 * self.t_c - self.t_d

    @property
    def tau_f(self):
        return self.t_f + 2 * (self.t_c - self.t_d)

    @property
    def turn_duration(self):
        """tau_c - tau_b = tau_d - tau_c, the length of each of the two turning segments."""
        return self.t_c - self.t_d

    @property
    def segment_durations(self):
        """
        The tau-durations of segments I to IV. They are taken from the physical times so that
        the two middle ones are equal exactly.
        """
        turn = self.turn_duration
        return self.t_d - self.t_a, turn, turn, self.t_f - self.t_d

    @property
    def direct_duration(self):
        return self.t_f - self.t_a

    def time_at(self, tau):
        """
        Physical time at parameter tau, for tau within [tau_a, tau_f].
        """
        tau = np.asarray(tau, dtype=np.float64)
        if np.any(tau < self.tau_a) or np.any(tau > self.tau_f):
            raise DomainError("tau outside [%g, %g]" % (self.tau_a, self.tau_f))
        t = np.where(tau <= self.tau_c, tau,
                     np.where(tau <= self.tau_d, 2 * self.tau_c - tau,
                              tau + 2 * (self.tau_c - self.tau_d)))
        return t if t.ndim else float(t)

    def slope_at(self, tau):
        """dt/dtau: +1 on the forward branches, -1 on the zigzag."""
        tau = np.asarray(tau, dtype=np.float64)
        slope = np.where((tau > self.tau_c) & (tau <= self.tau_d), -1.0, 1.0)
        return slope if slope.ndim else float(slope)


def build_tau_map(t_a: float, t_d: float, t_c: float, t_f: float) -> TauMap:
    """
    :param t_a: start of the trajectory
    :param t_d: physical time the particle turns back down to
    :param t_c: physical time at which the particle turns backward
    :param t_f: end of the trajectory
    Requires t_a < t_d < t_c < t_f.
    """
    times = [float(t) for t in (t_a, t_d, t_c, t_f)]
    if not all(np.isfinite(times)):
        raise DomainError("Turning times must be finite, got %s" % times)
    if not times[0] < times[1] < times[2] < times[3]:
        raise DomainError("Turning times must satisfy t_a < t_d < t_c < t_f, got "
                          "t_a=%g, t_d=%g, t_c=%g, t_f=%g" % tuple(times))
    return TauMap(*times)
