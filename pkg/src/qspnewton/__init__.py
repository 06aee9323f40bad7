"""Symmetric quantum signal processing phase factors by Newton's method.

Typical use::

    from qspnewton import jacobi_anger_cos, newton_solve
    c = jacobi_anger_cos(100.0, alpha=0.9)
    phi, report = newton_solve(c)
"""

from .chebyshev import coefficients_from_samples, evaluate_series, infinity_norm, sample_grid
from .jacobian import jacobian_fd, jacobian_mps_complex, jacobian_mps_real
from .linalg import SingularMatrixError, condition_estimate, lu_solve
from .qsp import evaluate_g_complex, evaluate_g_real, evaluate_u
from .solvers import (
    NewtonBreakdown,
    SolverConfig,
    SolverReport,
    evaluate_F,
    fpi_solve,
    newton_solve,
    residual_l1,
    solve,
)
from .targets import (
    TargetSpec,
    bessel_j_sequence,
    build_target,
    gaussian_coeffs,
    jacobi_anger_cos,
    jacobi_anger_sin,
    rescale_to_norm,
)
from .types import (
    ChebyshevCoeffVector,
    DomainError,
    FullPhaseFactors,
    InvalidInputError,
    Parity,
    ReducedPhaseFactors,
    build_full,
    reduce_full,
)

__version__ = "0.1.0"
