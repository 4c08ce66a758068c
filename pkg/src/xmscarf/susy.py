"""Superpotential, SUSY partner potentials and shape invariance (trigonometric family).

With W the superpotential, the partners are V± = W^2 ± W' and satisfy the
translational shape-invariance relation

    V+(a, b, x) = V-(a+1, b+1, x) + k^2 (a+b+2).

V- plus the factorization energy k^2 (a+b+1)^2 / 4 reproduces the potential
of :mod:`xmscarf.potentials`.
"""

import numpy as np

from .errors import SingularPointError
from .jacobi import jacobi_deriv, jacobi_eval
from .potentials import TRIG

__all__ = [
    "factorization_energy",
    "superpotential",
    "superpotential_deriv",
    "partner_potential",
    "shape_invariance_defect",
]

_SING_TOL = 1e-12


def _require_trig(spec):
    if spec.family != TRIG:
        raise ValueError("SUSY machinery is implemented for the trigonometric family only")


def factorization_energy(spec):
    """Constant k^2 (a+b+1)^2 / 4 placing the ground state of V- at zero energy."""
    return spec.k**2 * (spec.a + spec.b + 1) ** 2 / 4.0


def _ratios(m, a, b, u):
    """The two ratio terms in the superpotential bracket and their u-derivatives.

    r1 = P_{m-1}^(-a,b) / P_m^(-a-1,b-1),  r2 = P_{m-1}^(-a-1,b+1) / P_m^(-a-2,b).
    """
    q1 = jacobi_eval(m, -a - 1, b - 1, u)
    q2 = jacobi_eval(m, -a - 2, b, u)
    if np.any(np.abs(q1) < _SING_TOL) or np.any(np.abs(q2) < _SING_TOL):
        raise SingularPointError("superpotential denominator vanishes at a requested point")
    p1 = jacobi_eval(m - 1, -a, b, u)
    p2 = jacobi_eval(m - 1, -a - 1, b + 1, u)
    r1 = p1 / q1
    r2 = p2 / q2
    d1 = (jacobi_deriv(m - 1, -a, b, u) * q1 - p1 * jacobi_deriv(m, -a - 1, b - 1, u)) / q1**2
    d2 = (jacobi_deriv(m - 1, -a - 1, b + 1, u) * q2 - p2 * jacobi_deriv(m, -a - 2, b, u)) / q2**2
    return r1, r2, d1, d2


def _w_and_deriv(m, a, b, k, x):
    x = np.asarray(x, dtype=float)
    s, c = np.sin(k * x), np.cos(k * x)
    cc = a - b - m + 1
    w = k * (a - b) / 2.0 / c + k * (a + b + 1) / 2.0 * s / c
    dw = k**2 * (a - b) / 2.0 * s / c**2 + k**2 * (a + b + 1) / 2.0 / c**2
    if m >= 1:
        r1, r2, d1, d2 = _ratios(m, a, b, s)
        w = w - k * cc * c / 2.0 * (r1 - r2)
        dw = dw + k**2 * cc / 2.0 * (s * (r1 - r2) - c**2 * (d1 - d2))
    return w[()], dw[()]


def superpotential(spec, x):
    """W(x) = -psi_m'(x)/psi_m(x), in closed form via Jacobi-polynomial ratios."""
    _require_trig(spec)
    return _w_and_deriv(spec.m, spec.a, spec.b, spec.k, x)[0]


def superpotential_deriv(spec, x):
    """Analytic W'(x) (quotient rule on the closed form; no stencils)."""
    _require_trig(spec)
    return _w_and_deriv(spec.m, spec.a, spec.b, spec.k, x)[1]


def partner_potential(spec, sign, x):
    """Partner potential V± = W^2 ± W' at x; sign is '+' or '-' (or ±1)."""
    _require_trig(spec)
    s = {"+": 1.0, "-": -1.0, 1: 1.0, -1: -1.0}.get(sign)
    if s is None:
        raise ValueError("sign must be '+' or '-'")
    w, dw = _w_and_deriv(spec.m, spec.a, spec.b, spec.k, x)
    return w**2 + s * dw


def shape_invariance_defect(spec, x):
    """|V+(a,b,x) - V-(a+1,b+1,x) - k^2 (a+b+2)| pointwise."""
    _require_trig(spec)
    a, b, k, m = spec.a, spec.b, spec.k, spec.m
    wp, dwp = _w_and_deriv(m, a, b, k, x)
    wm, dwm = _w_and_deriv(m, a + 1, b + 1, k, x)
    return np.abs((wp**2 + dwp) - (wm**2 - dwm) - k**2 * (a + b + 2))[()]
