from kernels.errors import CausticError, DegeneracyError, DomainError
from kernels.params import *
from dataclasses import dataclass
from typing import Union
import numpy as np


@dataclass(frozen=True)
class ComplexGaussianKernel:
    """
    A transition amplitude of the closed form
        K(q_out, q_in) = prefactor * exp(i (alpha q_out^2 + beta q_in^2 + gamma q_out q_in))
    in units where hbar = m = 1.

    phase_branch counts the quarter-turns accumulated by the phase of the prefactor (the Maslov
    index): a forward oscillator kernel past mu caustics carries exp(-i pi/4 - i pi mu / 2).
    """
    prefactor: complex
    alpha: complex
    beta: complex
    gamma: complex
    phase_branch: int = 0

    def __post_init__(self):
        if self.gamma == 0:
            raise DegeneracyError("A kernel with gamma = 0 does not propagate (caustic)")

    def evaluate(self, q_out, q_in):
        q_out = np.asarray(q_out, dtype=np.float64)
        q_in = np.asarray(q_in, dtype=np.float64)
        exponent = self.alpha * q_out ** 2 + self.beta * q_in ** 2 + self.gamma * q_out * q_in
        return self.prefactor * np.exp(1j * exponent)

    def coefficients(self):
        return np.array([self.prefactor, self.alpha, self.beta, self.gamma], dtype=np.complex128)


@dataclass(frozen=True)
class DeltaKernel:
    """
    A delta-supported operator (D psi)(x) = coefficient * exp(i chirp x^2) * psi(x / scale). This
    is what a Gaussian composition degenerates to when the shared endpoint drops out of the
    quadratic form. With scale = 1 and chirp = 0 it is coefficient * delta(q_out - q_in).
    """
    coefficient: complex
    scale: float = 1.0
    chirp: float = 0.0

    @classmethod
    def identity(cls):
        return cls(1.0 + 0j)

    def is_delta_like(self, tol=degeneracy_tol):
        return abs(self.scale - 1) <= tol and abs(self.chirp) <= tol


AnyKernel = Union[ComplexGaussianKernel, DeltaKernel]


def _maslov_prefactor(modulus_sq, branch):
    return np.sqrt(modulus_sq) * np.exp(-1j * np.pi / 4 - 1j * np.pi * branch / 2)


def make_free_kernel(duration: float) -> ComplexGaussianKernel:
    """
    Free-particle kernel (2 pi i T)^{-1/2} exp(i (q_out - q_in)^2 / (2 T)).

    :param duration: the propagation time T, strictly positive
    """
    if not duration > 0:
        raise DomainError("Free kernel duration must be positive, got %r" % duration)
    duration = float(duration)
    coef = 1 / (2 * duration)
    return ComplexGaussianKernel(
        prefactor=1 / np.sqrt(2j * np.pi * duration),
        alpha=coef,
        beta=coef,
        gamma=-1 / duration,
    )


def make_oscillator_kernel(omega: float, duration: float) -> ComplexGaussianKernel:
    """
    Harmonic-oscillator (Mehler) kernel

        [omega / (2 pi i sin(omega T))]^{1/2}
            * exp(i omega ((q_out^2 + q_in^2) cos(omega T) - 2 q_out q_in) / (2 sin(omega T)))

    The square root is continued through the caustics omega T = n pi rather than taken on the
    principal branch, so that the kernels compose into each other for any durations.

    :param omega: the oscillator frequency, strictly positive
    :param duration: the propagation time T, strictly positive
    """
    if not omega > 0:
        raise DomainError("Oscillator frequency must be positive, got %r" % omega)
    if not duration > 0:
        raise DomainError("Oscillator kernel duration must be positive, got %r" % duration)
    omega, duration = float(omega), float(duration)
    phase = omega * duration
    sin = np.sin(phase)
    if abs(sin) < caustic_band:
        raise CausticError("omega * T = %.9g is within %g of a caustic (sin = %.3g)" %
                           (phase, caustic_band, sin))

    branch = int(np.floor(phase / np.pi))
    coef = omega * np.cos(phase) / (2 * sin)
    return ComplexGaussianKernel(
        prefactor=_maslov_prefactor(omega / (2 * np.pi * abs(sin)), branch),
        alpha=coef,
        beta=coef,
        gamma=-omega / sin,
        phase_branch=branch,
    )


def reverse_kernel(k: AnyKernel) -> AnyKernel:
    """
    The backward-time kernel: the amplitude carrying exp(-iS) instead of exp(iS). For a real
    potential its values are the complex conjugates of the forward ones. Reversing twice returns
    the original kernel.
    """
    if isinstance(k, DeltaKernel):
        return DeltaKernel(np.conj(k.coefficient), k.scale, -k.chirp)
    return ComplexGaussianKernel(
        prefactor=np.conj(k.prefactor),
        alpha=-np.conj(k.alpha),
        beta=-np.conj(k.beta),
        gamma=-np.conj(k.gamma),
        phase_branch=-k.phase_branch - 1,
    )


def fresnel_factor(a):
    """
    Closed form of the integral of exp(i a q^2) over the real line, sqrt(i pi / a), for a != 0
    with Im(a) >= 0.
    """
    return np.sqrt(np.pi / (-1j * a))


def compose_gaussian(later: AnyKernel, earlier: AnyKernel) -> AnyKernel:
    """
    Composes two kernels by integrating over their shared endpoint,
        K(q_out, q_in) = int dq_c later(q_out, q_c) earlier(q_c, q_in).

    When the quadratic coefficient of q_c vanishes (later.beta + earlier.alpha = 0 within
    degeneracy_tol) the integral is a Fourier representation of a delta function and the result
    is a DeltaKernel instead of a Gaussian.

    :return: a ComplexGaussianKernel, or a DeltaKernel in the delta-degenerate case
    """
    if isinstance(later, DeltaKernel) and isinstance(earlier, DeltaKernel):
        return DeltaKernel(
            coefficient=later.coefficient * earlier.coefficient,
            scale=later.scale * earlier.scale,
            chirp=later.chirp + earlier.chirp / later.scale ** 2,
        )
    if isinstance(later, DeltaKernel):
        s = later.scale
        return ComplexGaussianKernel(
            prefactor=later.coefficient * earlier.prefactor,
            alpha=earlier.alpha / s ** 2 + later.chirp,
            beta=earlier.beta,
            gamma=earlier.gamma / s,
            phase_branch=earlier.phase_branch,
        )
    if isinstance(earlier, DeltaKernel):
        s = earlier.scale
        return ComplexGaussianKernel(
            prefactor=later.prefactor * earlier.coefficient * abs(s),
            alpha=later.alpha,
            beta=(later.beta + earlier.chirp) * s ** 2,
            gamma=later.gamma * s,
            phase_branch=later.phase_branch,
        )

    a = later.beta + earlier.alpha
    scale = max(1.0, abs(later.beta), abs(earlier.alpha))
    if abs(a) <= degeneracy_tol * scale:
        return _compose_degenerate(later, earlier)
    if a.imag < -degeneracy_tol * scale:
        raise DegeneracyError("The integral over the shared endpoint diverges (coefficient %s)" % a)

    gamma = -later.gamma * earlier.gamma / (2 * a)
    return ComplexGaussianKernel(
        prefactor=later.prefactor * earlier.prefactor * fresnel_factor(a),
        alpha=later.alpha - later.gamma ** 2 / (4 * a),
        beta=earlier.beta - earlier.gamma ** 2 / (4 * a),
        gamma=gamma,
        phase_branch=later.phase_branch + earlier.phase_branch + int(np.real(a) < 0),
    )


def _compose_degenerate(later: ComplexGaussianKernel, earlier: ComplexGaussianKernel):
    # int dq_c exp(i q_c (g_l q_out + g_e q_in)) = 2 pi delta(g_l q_out + g_e q_in), which only
    # exists as a distribution for real linear coefficients
    if abs(np.imag(later.gamma)) > degeneracy_tol or abs(np.imag(earlier.gamma)) > degeneracy_tol:
        raise DegeneracyError("Delta-degenerate composition with complex linear coefficients")
    g_later, g_earlier = float(np.real(later.gamma)), float(np.real(earlier.gamma))
    scale = -g_earlier / g_later
    return DeltaKernel(
        coefficient=2 * np.pi * later.prefactor * earlier.prefactor / abs(g_earlier),
        scale=scale,
        chirp=float(np.real(later.alpha + earlier.beta / scale ** 2)),
    )
