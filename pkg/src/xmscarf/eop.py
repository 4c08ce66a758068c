"""Exceptional X_m Jacobi polynomials.

The family P̂_n^(a,b,m), n = m, m+1, ..., is built from classical Jacobi
polynomials through a bilinear representation, is orthogonal on (-1, 1)
with respect to (1-x)^a (1+x)^b / [P_m^(-a-1,b-1)(x)]^2, and satisfies a
second-order ODE with rational coefficients. m = 0 recovers the classical
family.
"""

import math
import os

import numpy as np

from .errors import DegenerateParameterError, SingularPointError
from .jacobi import jacobi_deriv, jacobi_eval
from .numerics import gauss_legendre

__all__ = [
    "admissible",
    "eop_eval",
    "eop_deriv",
    "eop_ode_coeffs",
    "eop_ode_residual",
    "eop_weight",
    "eop_norm_sq",
    "eop_inner_product",
    "default_quad_order",
]

_INT_TOL = 1e-12
_SING_TOL = 1e-12


def default_quad_order():
    """Quadrature order for inner products; XMSCARF_QUAD_ORDER overrides (min 10)."""
    raw = os.environ.get("XMSCARF_QUAD_ORDER")
    if raw is None:
        return 200
    order = int(raw)
    if order < 10:
        raise ValueError("XMSCARF_QUAD_ORDER must be an integer >= 10")
    return order


def _is_int_in_range(v, lo, hi):
    """True if v is within 1e-12 of an integer in [lo, hi]."""
    r = round(v)
    return abs(v - r) < _INT_TOL and lo <= r <= hi


def admissible(a, b, m):
    """Whether the weight denominator P_m^(-a-1,b-1) is zero-free on [-1, 1].

    For m >= 1 requires, simultaneously: b != 0; a and a-b-m+1 not integers
    in {0, ..., m-1}; a > m-2; and sgn(a-m+1) = sgn(b). m = 0 is always
    admissible. Integer membership uses absolute tolerance 1e-12.
    """
    if m == 0:
        return True
    if abs(b) < _INT_TOL:
        return False
    if _is_int_in_range(a, 0, m - 1):
        return False
    if _is_int_in_range(a - b - m + 1, 0, m - 1):
        return False
    if not a > m - 2:
        return False
    return np.sign(a - m + 1) == np.sign(b)


def _check_index(n, m):
    if m < 0:
        raise ValueError("codimension m must be >= 0")
    if n < m:
        raise ValueError(f"degree n={n} must satisfy n >= m={m}")


def eop_eval(n, a, b, m, x):
    """Evaluate P̂_n^(a,b,m)(x) for real or complex scalar/array x.

    m = 0 returns the classical P_n^(a,b)(x). Otherwise, with j = n - m:

        (-1)^m [ (a+b+j+1)/(2(a+j+1)) (x-1) P_m^(-a-1,b-1) P_{j-1}^(a+2,b)
                 + (a-m+1)/(a+j+1) P_m^(-a-2,b) P_j^(a+1,b-1) ]
    """
    _check_index(n, m)
    if m == 0:
        return jacobi_eval(n, a, b, x)
    j = n - m
    if abs(a + j + 1) < _INT_TOL:
        raise DegenerateParameterError(f"representation undefined: a + (n-m) + 1 = 0 (a={a}, n={n}, m={m})")
    x = np.asarray(x)
    sign = (-1.0) ** m
    t1 = (a + b + j + 1) / (2.0 * (a + j + 1)) * (x - 1.0) \
        * jacobi_eval(m, -a - 1, b - 1, x) * jacobi_eval(j - 1, a + 2, b, x)
    t2 = (a - m + 1) / (a + j + 1) * jacobi_eval(m, -a - 2, b, x) * jacobi_eval(j, a + 1, b - 1, x)
    return (sign * (t1 + t2))[()]


def eop_deriv(n, a, b, m, x, r=1):
    """r-th derivative (r = 1 or 2) of P̂_n^(a,b,m) at x, exact via product rule."""
    _check_index(n, m)
    if r not in (1, 2):
        raise ValueError("only first and second derivatives are supported")
    if m == 0:
        return jacobi_deriv(n, a, b, x, r)
    j = n - m
    if abs(a + j + 1) < _INT_TOL:
        raise DegenerateParameterError(f"representation undefined: a + (n-m) + 1 = 0 (a={a}, n={n}, m={m})")
    x = np.asarray(x)
    sign = (-1.0) ** m
    k1 = (a + b + j + 1) / (2.0 * (a + j + 1))
    k2 = (a - m + 1) / (a + j + 1)

    A = jacobi_eval(m, -a - 1, b - 1, x)
    A1 = jacobi_deriv(m, -a - 1, b - 1, x, 1)
    B = jacobi_eval(j - 1, a + 2, b, x)
    B1 = jacobi_deriv(j - 1, a + 2, b, x, 1)
    C = jacobi_eval(m, -a - 2, b, x)
    C1 = jacobi_deriv(m, -a - 2, b, x, 1)
    D = jacobi_eval(j, a + 1, b - 1, x)
    D1 = jacobi_deriv(j, a + 1, b - 1, x, 1)
    u = x - 1.0

    if r == 1:
        d1 = k1 * (A * B + u * A1 * B + u * A * B1)
        d2 = k2 * (C1 * D + C * D1)
        return (sign * (d1 + d2))[()]

    A2 = jacobi_deriv(m, -a - 1, b - 1, x, 2)
    B2 = jacobi_deriv(j - 1, a + 2, b, x, 2)
    C2 = jacobi_deriv(m, -a - 2, b, x, 2)
    D2 = jacobi_deriv(j, a + 1, b - 1, x, 2)
    d1 = k1 * (2.0 * A1 * B + 2.0 * A * B1 + u * (A2 * B + 2.0 * A1 * B1 + A * B2))
    d2 = k2 * (C2 * D + 2.0 * C1 * D1 + C * D2)
    return (sign * (d1 + d2))[()]


def eop_ode_coeffs(n, a, b, m, x):
    """Rational ODE coefficients (Q1(x), R1(x)) of the exceptional family.

    Q1 = (a-b-m+1)(1-x^2) P_{m-1}^(-a,b)/P_m^(-a-1,b-1) - (a+1)(1+x) + (b+1)(1-x)
    R1 = b(a-b-m+1)(1-x) P_{m-1}^(-a,b)/P_m^(-a-1,b-1) + n^2 + n(a+b-2m+1) - 2bm
    """
    x = np.asarray(x)
    den = jacobi_eval(m, -a - 1, b - 1, x)
    if np.any(np.abs(den) < _SING_TOL):
        raise SingularPointError(f"P_{m}^({-a - 1},{b - 1}) vanishes at a requested point")
    ratio = jacobi_eval(m - 1, -a, b, x) / den
    c = a - b - m + 1
    q1 = c * (1.0 - x**2) * ratio - (a + 1) * (1.0 + x) + (b + 1) * (1.0 - x)
    r1 = b * c * (1.0 - x) * ratio + n**2 + n * (a + b - 2 * m + 1) - 2.0 * b * m
    return q1[()], r1[()]


def eop_ode_residual(n, a, b, m, x):
    """|(1-x^2) y'' + Q1 y' + R1 y| at x, with y = P̂_n^(a,b,m) (exact derivatives)."""
    x = np.asarray(x, dtype=float)
    q1, r1 = eop_ode_coeffs(n, a, b, m, x)
    y = eop_eval(n, a, b, m, x)
    y1 = eop_deriv(n, a, b, m, x, 1)
    y2 = eop_deriv(n, a, b, m, x, 2)
    return np.abs((1.0 - x**2) * y2 + q1 * y1 + r1 * y)[()]


def eop_weight(a, b, m, x):
    """Weight (1-x)^a (1+x)^b / P_m^(-a-1,b-1)(x); positive on (-1,1) when admissible."""
    x = np.asarray(x, dtype=float)
    den = jacobi_eval(m, -a - 1, b - 1, x)
    if np.any(np.abs(den) < _SING_TOL):
        raise SingularPointError(f"P_{m}^({-a - 1},{b - 1}) vanishes at a requested point")
    return ((1.0 - x) ** a * (1.0 + x) ** b / den)[()]


def _gamma(v, what):
    if v <= 0 and abs(v - round(v)) < _INT_TOL:
        raise DegenerateParameterError(f"gamma pole in {what}: argument {v}")
    return math.gamma(v)


def eop_norm_sq(n, a, b, m):
    """Closed-form squared L^2 norm of P̂_n^(a,b,m) under the orthogonality weight.

    2^(a+b+1) (n+b)(n-2m+a+1) Γ(n-m+a+2) Γ(n-m+b)
    / [(2n-2m+a+b+1)(n-m+a+1)^2 (n-m)! Γ(n-m+a+b+1)]

    Equivalently, the classical Jacobi norm h_{n-m}^(a+1,b-1) times
    (n+b)(n-2m+a+1)/(n-m+a+1)^2. Verified against Gauss-Legendre quadrature
    of the orthogonality integral.
    """
    _check_index(n, m)
    den = (2 * n - 2 * m + a + b + 1) * (n - m + a + 1) ** 2
    if abs(den) < _INT_TOL:
        raise DegenerateParameterError("zero denominator in norm formula")
    if m == 0:
        # (n+b) Γ(n+b) folded into Γ(n+b+1), which stays finite at n+b = 0
        nb_part = _gamma(n + b + 1, "norm")
    else:
        nb_part = (n + b) * _gamma(n - m + b, "norm")
    num = 2.0 ** (a + b + 1) * (n - 2 * m + a + 1) * nb_part * _gamma(n - m + a + 2, "norm")
    den *= math.factorial(n - m) * _gamma(n - m + a + b + 1, "norm")
    return num / den


def eop_inner_product(n1, n2, a, b, m, quad_order=None):
    """Gauss-Legendre approximation of the orthogonality integral.

    Integrates (1-x)^a (1+x)^b / [P_m^(-a-1,b-1)]^2 * P̂_{n1} P̂_{n2} over
    (-1, 1). Requires a, b > -1 for the endpoint factors to be integrable.
    """
    if a <= -1 or b <= -1:
        raise DegenerateParameterError("quadrature-backed inner product requires a, b > -1")
    if quad_order is None:
        quad_order = default_quad_order()
    rule = gauss_legendre(quad_order)
    x = rule.nodes
    den = jacobi_eval(m, -a - 1, b - 1, x)
    if np.any(np.abs(den) < _SING_TOL):
        raise SingularPointError(f"P_{m}^({-a - 1},{b - 1}) vanishes at a quadrature node")
    f = (1.0 - x) ** a * (1.0 + x) ** b / den**2 * eop_eval(n1, a, b, m, x) * eop_eval(n2, a, b, m, x)
    return float(np.dot(rule.weights, f))
