from kernels.errors import DomainError, NumericalError, CausticError, DegeneracyError, \
    DiscretizationError
from kernels.gaussian import ComplexGaussianKernel, DeltaKernel, make_free_kernel, \
    make_oscillator_kernel, reverse_kernel, compose_gaussian
from kernels.states import GaussianState, apply_to_state, random_probes
from kernels.delta import DeltaReport, classify_delta
