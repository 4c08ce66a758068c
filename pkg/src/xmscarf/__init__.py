"""Exceptional X_m Jacobi polynomials and rationally extended Scarf potentials."""

from .eop import (
    admissible,
    eop_eval,
    eop_inner_product,
    eop_norm_sq,
    eop_ode_residual,
    eop_weight,
)
from .errors import (
    ConvergenceFailureError,
    DegenerateParameterError,
    NoSuchBoundStateError,
    SingularPointError,
    XmScarfError,
)
from .jacobi import jacobi_deriv, jacobi_eval
from .numerics import QuadratureRule, eigen_sym_tridiag, fd_second_derivative, gauss_legendre
from .oracle import (
    GridSpec,
    SpectrumResult,
    VerificationReport,
    default_grid,
    hamiltonian_residual,
    rayleigh_quotient,
    solve_spectrum,
    spectrum_match_report,
)
from .potentials import (
    HYPER,
    SHIFTED,
    TRIG,
    PotentialSpec,
    energy,
    hyperbolic_bound_count,
    potential_value,
    pt_defect,
    wavefunction,
)
from .susy import (
    factorization_energy,
    partner_potential,
    shape_invariance_defect,
    superpotential,
    superpotential_deriv,
)

__version__ = "0.1.0"
