"""Classical Jacobi polynomials P_n^(a,b) for arbitrary real parameters.

Evaluation uses the explicit binomial sum

    P_n^(a,b)(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)

with generalized binomials computed as finite products. Unlike the
three-term recurrence, this remains valid for the negative, non-classical
parameter values (e.g. P_m^(-a-1,b-1)) that the rational extensions need.
Degrees here are small, so the O(n) sum is cheap.
"""

import numpy as np

__all__ = ["gen_binom", "jacobi_eval", "jacobi_deriv", "jacobi_coeffs"]


def gen_binom(alpha, j):
    """Generalized binomial coefficient C(alpha, j) for real alpha, integer j >= 0.

    Computed as the j-term product prod_{i=1..j} (alpha - i + 1)/i, which is
    finite for every real alpha (no gamma-function poles).
    """
    if j < 0:
        return 0.0
    out = 1.0
    for i in range(1, j + 1):
        out *= (alpha - i + 1) / i
    return out


def jacobi_eval(n, a, b, x):
    """Evaluate P_n^(a,b)(x) for arbitrary real a, b and real or complex x.

    x may be a scalar or ndarray. Degree -1 returns 0, degree 0 returns 1.
    Real input with real parameters yields exactly real output.
    """
    x = np.asarray(x)
    dtype = complex if x.dtype.kind == "c" else float
    if n < 0:
        return np.zeros(x.shape, dtype=dtype)[()]
    if n == 0:
        return np.ones(x.shape, dtype=dtype)[()]
    lo = (x - 1.0) / 2.0
    hi = (x + 1.0) / 2.0
    acc = np.zeros_like(lo)
    for s in range(n + 1):
        acc = acc + gen_binom(n + a, n - s) * gen_binom(n + b, s) * lo**s * hi ** (n - s)
    return acc[()]


def jacobi_deriv(n, a, b, x, r=1):
    """r-th derivative of P_n^(a,b) at x via the parameter-shift identity.

    d^r/dx^r P_n^(a,b) = [prod_{i=1..r} (n+a+b+i) / 2^r] P_{n-r}^(a+r,b+r).

    The prefactor is evaluated as a finite product, so the identity stays
    total even where the equivalent gamma-function ratio has poles.
    """
    if r < 1:
        raise ValueError("derivative order r must be >= 1")
    if n - r < 0:
        x = np.asarray(x)
        dtype = complex if x.dtype.kind == "c" else float
        return np.zeros(x.shape, dtype=dtype)[()]
    coef = 1.0
    for i in range(1, r + 1):
        coef *= (n + a + b + i) / 2.0
    return coef * jacobi_eval(n - r, a + r, b + r, x)


def jacobi_coeffs(n, a, b):
    """Monomial coefficients of P_n^(a,b), lowest degree first.

    Exact expansion of the binomial sum; mainly useful as an independent
    cross-check of jacobi_eval / jacobi_deriv.
    """
    if n < 0:
        return np.zeros(1)
    coeffs = np.zeros(n + 1)
    for s in range(n + 1):
        c = gen_binom(n + a, n - s) * gen_binom(n + b, s) / 2.0**n
        # ((x-1))^s (x+1)^(n-s) expanded via binomial theorem
        term = np.zeros(n + 1)
        for i in range(s + 1):
            for j in range(n - s + 1):
                term[i + j] += gen_binom(s, i) * (-1.0) ** (s - i) * gen_binom(n - s, j)
        coeffs += c * term
    return coeffs
