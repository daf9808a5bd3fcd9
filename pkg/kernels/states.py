from kernels.errors import DegeneracyError, DomainError
from kernels.gaussian import AnyKernel, DeltaKernel, fresnel_factor
from kernels.params import *
from dataclasses import dataclass
from typing import List
import numpy as np


@dataclass(frozen=True)
class GaussianState:
    """
    A (possibly chirped) Gaussian wave packet

        psi(q) = normalization * exp(-(q - c)^2 / (2 w^2) + i chirp (q - c)^2 + i p (q - c))

    with c = center, w = width and p = momentum. Gaussian kernels map these states onto
    themselves, which makes them exact probes of kernel composition.
    """
    center: float
    width: float
    momentum: float = 0.0
    normalization: complex = 1.0 + 0j
    chirp: float = 0.0

    def __post_init__(self):
        if not self.width > 0 or not np.isfinite(self.width):
            raise DomainError("Gaussian state width must be positive and finite, got %r" %
                              self.width)

    @classmethod
    def normalized(cls, center, width, momentum=0.0, chirp=0.0):
        return cls(center, width, momentum, 1 / np.sqrt(width * np.sqrt(np.pi)) + 0j, chirp)

    def exponents(self):
        """
        Writes the state as exp(i (A q^2 + B q) + L).

        :return: the complex coefficients (A, B, L)
        """
        A = self.chirp + 0.5j / self.width ** 2
        B = self.momentum - 2 * A * self.center
        L = np.log(complex(self.normalization)) + 1j * (A * self.center ** 2 -
                                                        self.momentum * self.center)
        return A, B, L

    @classmethod
    def from_exponents(cls, A, B, L):
        if not np.imag(A) > 0:
            raise DegeneracyError("State exp(i A q^2 + ...) with Im(A) = %g is not normalizable" %
                                  np.imag(A))
        width = 1 / np.sqrt(2 * np.imag(A))
        center = -np.imag(B) / (2 * np.imag(A))
        momentum = np.real(B) + 2 * np.real(A) * center
        normalization = np.exp(L - 1j * (A * center ** 2 - momentum * center))
        return cls(float(center), float(width), float(momentum), complex(normalization),
                   float(np.real(A)))

    def evaluate(self, q):
        dq = np.asarray(q, dtype=np.float64) - self.center
        return self.normalization * np.exp(-dq ** 2 / (2 * self.width ** 2) +
                                           1j * (self.chirp * dq ** 2 + self.momentum * dq))

    def norm(self):
        return abs(self.normalization) * np.pi ** 0.25 * np.sqrt(self.width)

    def inner(self, other: "GaussianState") -> complex:
        """
        The overlap <self|other> = int conj(self(q)) other(q) dq, in closed form.
        """
        A1, B1, L1 = self.exponents()
        A2, B2, L2 = other.exponents()
        a = A2 - np.conj(A1)
        b = B2 - np.conj(B1)
        return complex(fresnel_factor(a) * np.exp(-1j * b ** 2 / (4 * a) + L2 + np.conj(L1)))

    def scaled(self, factor: complex) -> "GaussianState":
        return GaussianState(self.center, self.width, self.momentum,
                             complex(self.normalization * factor), self.chirp)


def apply_to_state(k: AnyKernel, psi: GaussianState) -> GaussianState:
    """
    Propagates a Gaussian state through a kernel, (K psi)(q_out) = int dq_in K(q_out, q_in)
    psi(q_in). The result is again a Gaussian state and is computed exactly.

    :param k: a ComplexGaussianKernel or a DeltaKernel
    :param psi: the state to propagate
    :return: the propagated state
    """
    A, B, L = psi.exponents()
    if isinstance(k, DeltaKernel):
        s = k.scale
        return GaussianState.from_exponents(A / s ** 2 + k.chirp, B / s,
                                            L + np.log(complex(k.coefficient)))

    a = k.beta + A
    if not np.imag(a) > 0:
        raise DegeneracyError("Propagating this state diverges (quadratic coefficient %s)" % a)
    new_A = k.alpha - k.gamma ** 2 / (4 * a)
    new_B = -k.gamma * B / (2 * a)
    new_L = L - 1j * B ** 2 / (4 * a) + np.log(complex(k.prefactor * fresnel_factor(a)))
    return GaussianState.from_exponents(new_A, new_B, new_L)


def random_probes(count: int, seed=None) -> List[GaussianState]:
    """
    Draws normalized probe packets with centers, widths and momenta uniformly distributed in the
    ranges set in params.py.
    """
    if count < 1:
        raise DomainError("At least one probe is needed, got %d" % count)
    rng = np.random.default_rng(seed)
    centers = rng.uniform(*probe_center_range, size=count)
    widths = rng.uniform(*probe_width_range, size=count)
    momenta = rng.uniform(*probe_momentum_range, size=count)
    return [GaussianState.normalized(float(c), float(w), float(p))
            for c, w, p in zip(centers, widths, momenta)]
