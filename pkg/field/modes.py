from kernels.errors import DomainError
from dataclasses import dataclass
from typing import Tuple
import numpy as np


@dataclass(frozen=True)
class ModeSet:
    """
    A truncated set of momentum modes of a free scalar field. In the momentum representation each
    mode is an independent oscillator with omega_p^2 = p^2 + m^2.
    """
    mass: float
    momenta: Tuple[float, ...]

    @property
    def frequencies(self):
        p = np.asarray(self.momenta, dtype=np.float64)
        return np.sqrt(p ** 2 + self.mass ** 2)

    def __len__(self):
        return len(self.momenta)


def build_mode_set(mass: float, p_max: float, n_modes: int) -> ModeSet:
    """
    Evenly spaced momenta p_max / n_modes, 2 p_max / n_modes, ..., p_max. The zero mode is left
    out.

    :param mass: the field mass m, non-negative
    :param p_max: the largest momentum kept
    :param n_modes: the number of modes, at least 1
    """
    if int(n_modes) != n_modes or n_modes < 1:
        raise DomainError("A mode set needs at least one mode, got %r" % n_modes)
    if not mass >= 0:
        raise DomainError("Field mass must be non-negative, got %r" % mass)
    if not p_max > 0:
        raise DomainError("p_max must be positive, got %r" % p_max)
    n_modes = int(n_modes)
    momenta = tuple(float(p) for p in p_max * np.arange(1, n_modes + 1) / n_modes)
    modes = ModeSet(float(mass), momenta)
    if np.any(modes.frequencies <= 0):
        raise DomainError("Mode set contains a zero-frequency mode")
    return modes
