"""Rationally extended Scarf potential families and their exact bound states.

Three families share one closed-form core built from ratios of classical
Jacobi polynomials:

* ``trig``    - real trigonometric Scarf well on (-pi/2k, pi/2k),
* ``shifted`` - the same well with an imaginary coordinate shift (complex,
  quasi-Hermitian, defined on the whole line),
* ``hyper``   - hyperbolic Scarf on the whole line (generally complex and
  PT-symmetric, with finitely many bound states).

Each family carries exact energies and wavefunctions indexed by n >= m.
"""

import math
from dataclasses import dataclass

import numpy as np

from .eop import admissible, eop_eval, eop_norm_sq
from .errors import DegenerateParameterError, NoSuchBoundStateError, SingularPointError
from .jacobi import jacobi_eval

__all__ = [
    "TRIG",
    "SHIFTED",
    "HYPER",
    "PotentialSpec",
    "potential_value",
    "energy",
    "wavefunction",
    "pt_defect",
    "hyperbolic_bound_count",
]

TRIG = "trig"
SHIFTED = "shifted"
HYPER = "hyper"

_SING_TOL = 1e-12
_ENDPOINT_GUARD = 1e-9


@dataclass(frozen=True)
class PotentialSpec:
    """Descriptor of one member of a potential family.

    family: "trig", "shifted" or "hyper"; m: codimension of the rational
    extension; (a, b): Jacobi parameters; k: inverse length scale;
    eps: imaginary shift (shifted family only).
    """

    family: str
    m: int
    a: float
    b: float
    k: float = 1.0
    eps: float = 0.0

    def __post_init__(self):
        if self.family not in (TRIG, SHIFTED, HYPER):
            raise ValueError(f"unknown family {self.family!r}")
        if self.m < 0:
            raise ValueError("m must be >= 0")
        if self.k == 0:
            raise ValueError("k must be nonzero")
        if self.family == TRIG and self.m >= 1 and not admissible(self.a, self.b, self.m):
            raise ValueError(
                f"inadmissible parameters (a={self.a}, b={self.b}, m={self.m}): "
                "the trigonometric potential would be singular in its domain"
            )

    def domain(self):
        """Open interval on which the potential is defined."""
        if self.family == TRIG:
            half = math.pi / (2.0 * abs(self.k))
            return (-half, half)
        return (-math.inf, math.inf)


def _check_domain(spec, x):
    lo, hi = spec.domain()
    x = np.asarray(x)
    if np.isrealobj(x) and spec.family == TRIG:
        if np.any(x <= lo + _ENDPOINT_GUARD) or np.any(x >= hi - _ENDPOINT_GUARD):
            raise SingularPointError(f"x must lie in ({lo}, {hi}) away from the endpoints")


def _poly_ratio(m, a, b, g):
    """P_{m-1}^(-a,b)(g) / P_m^(-a-1,b-1)(g) with a vanishing-denominator guard."""
    den = jacobi_eval(m, -a - 1, b - 1, g)
    if np.any(np.abs(den) < _SING_TOL):
        raise SingularPointError(f"P_{m}^({-a - 1},{b - 1}) vanishes at a requested point")
    return jacobi_eval(m - 1, -a, b, g) / den


def _scarf_core(m, a, b, k, s, c, g, hyper_sign):
    """Closed-form potential with s = sin(theta) (or i sinh kx), c the cosine factor.

    hyper_sign is +1 for the trigonometric cases and -1 for the hyperbolic one,
    where the leading sec^2/sec-tan terms and the rational terms change sign.
    """
    cc = a - b - m + 1
    ratio = _poly_ratio(m, a, b, g) if m >= 1 else 0.0
    lead = hyper_sign * (
        k**2 * (2 * a**2 + 2 * b**2 - 1) / 4.0 / c**2
        - k**2 * (b**2 - a**2) / 2.0 * s / c**2
    )
    if m == 0:
        return lead
    return (
        lead
        - hyper_sign * 2.0 * k**2 * m * cc
        - hyper_sign * k**2 * cc * (a + b + (a - b + 1) * g) * ratio
        + hyper_sign * k**2 * cc**2 * c**2 / 2.0 * ratio**2
    )


def potential_value(spec, x):
    """Evaluate the potential at x (scalar or array; complex x allowed for
    the trigonometric family as analytic continuation).

    The trig family returns exactly real values for real x.
    """
    _check_domain(spec, x)
    x = np.asarray(x)
    a, b, k, m = spec.a, spec.b, spec.k, spec.m
    if spec.family == TRIG:
        theta = k * x
        s, c = (np.sin(theta), np.cos(theta))
        return _scarf_core(m, a, b, k, s, c, s, +1.0)[()]
    if spec.family == SHIFTED:
        theta = k * x + 1j * spec.eps
        s, c = np.sin(theta), np.cos(theta)
        return _scarf_core(m, a, b, k, s, c, s, +1.0)[()]
    g = 1j * np.sinh(k * x)
    ch = np.cosh(k * x)
    sh_tanh = np.sinh(k * x) / ch**2  # sech * tanh
    cc = a - b - m + 1
    ratio = _poly_ratio(m, a, b, g) if m >= 1 else 0.0
    out = (
        -(k**2) * (2 * a**2 + 2 * b**2 - 1) / 4.0 / ch**2
        + 1j * k**2 * (b**2 - a**2) / 2.0 * sh_tanh
    )
    if m >= 1:
        out = (
            out
            + 2.0 * k**2 * m * cc
            + k**2 * cc * (a + b + (a - b + 1) * g) * ratio
            - k**2 * cc**2 * ch**2 / 2.0 * ratio**2
        )
    return (out + np.zeros_like(g))[()]


def _check_quantum_number(spec, n):
    if n < spec.m:
        raise NoSuchBoundStateError(f"n={n} below the lowest index m={spec.m}")
    if spec.family == HYPER and not n < spec.m - (spec.a + spec.b + 1) / 2.0:
        raise NoSuchBoundStateError(
            f"n={n} violates the hyperbolic bound n < m - (a+b+1)/2 = "
            f"{spec.m - (spec.a + spec.b + 1) / 2.0}"
        )


def energy(spec, n):
    """Exact bound-state energy E_n (units of k^2); n >= m, hyperbolic levels bounded."""
    _check_quantum_number(spec, n)
    e = spec.k**2 / 4.0 * (2 * n - 2 * spec.m + spec.a + spec.b + 1) ** 2
    return -e if spec.family == HYPER else e


def norm_constant(spec, n):
    """Closed-form normalization constant of the trigonometric wavefunctions.

    For the hyperbolic family the closed form hits gamma poles, so 1.0 is
    returned there (residual-type checks are normalization independent).
    """
    _check_quantum_number(spec, n)
    if spec.family == HYPER:
        return 1.0
    return math.sqrt(abs(spec.k) / eop_norm_sq(n, spec.a, spec.b, spec.m))


def wavefunction(spec, n, x):
    """Exact bound-state wavefunction psi_n at x (scalar or array).

    trig: N (1-sin kx)^(a/2+1/4) (1+sin kx)^(b/2+1/4) / P_m^(-a-1,b-1)(sin kx)
          * P̂_n^(a,b,m)(sin kx), real on the open domain.
    shifted: the same expression continued to kx + i*eps (principal-branch
          powers; valid for |kx| < pi/2 where the factors avoid the cut).
    hyper: argument i sinh kx, factors (1 -+ i sinh kx) with Re = 1 > 0.
    """
    _check_quantum_number(spec, n)
    _check_domain(spec, x)
    x = np.asarray(x)
    a, b, k, m = spec.a, spec.b, spec.k, spec.m
    N = norm_constant(spec, n)

    if spec.family == TRIG:
        u = np.sin(k * x)
        den = jacobi_eval(m, -a - 1, b - 1, u)
        if np.any(np.abs(den) < _SING_TOL):
            raise SingularPointError("wavefunction denominator vanishes at a requested point")
        out = N * (1.0 - u) ** (a / 2 + 0.25) * (1.0 + u) ** (b / 2 + 0.25) / den \
            * eop_eval(n, a, b, m, u)
        return out[()]

    if spec.family == SHIFTED:
        u = np.sin(k * x + 1j * spec.eps)
    else:
        u = 1j * np.sinh(k * x)
    u = u.astype(complex)
    den = jacobi_eval(m, -a - 1, b - 1, u)
    if np.any(np.abs(den) < _SING_TOL):
        raise SingularPointError("wavefunction denominator vanishes at a requested point")
    out = N * np.exp((a / 2 + 0.25) * np.log(1.0 - u) + (b / 2 + 0.25) * np.log(1.0 + u)) / den \
        * eop_eval(n, a, b, m, u)
    return out[()]


def pt_defect(spec, x):
    """|V*(-x) - V(x)|, the pointwise violation of PT symmetry."""
    return np.abs(np.conj(potential_value(spec, -np.asarray(x))) - potential_value(spec, x))[()]


def hyperbolic_bound_count(spec):
    """Number of bound states of the hyperbolic family: #{n : m <= n < m - (a+b+1)/2}."""
    if spec.family != HYPER:
        raise ValueError("bound count is defined for the hyperbolic family only")
    return max(0, math.ceil(-(spec.a + spec.b + 1) / 2.0))
