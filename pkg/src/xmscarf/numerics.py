"""Shared numerical kernels: quadrature, finite differences, tridiagonal eigenvalues."""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ConvergenceFailureError

__all__ = ["QuadratureRule", "gauss_legendre", "eigen_sym_tridiag", "fd_second_derivative"]


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray


def _legendre_and_deriv(order, x):
    """(P_n(x), P_n'(x)) by the three-term recurrence."""
    p0 = np.ones_like(x)
    if order == 0:
        return p0, np.zeros_like(x)
    p1 = x.copy()
    for k in range(2, order + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    dp = order * (x * p1 - p0) / (x**2 - 1.0)
    return p1, dp


def gauss_legendre(order):
    """Gauss-Legendre rule on (-1, 1): Legendre roots by Newton iteration.

    Initial guesses are the Chebyshev-like estimates cos(pi (i + 3/4)/(n + 1/2));
    iteration tolerance 1e-15, at most 100 sweeps. Weights 2/((1-x^2) P_n'(x)^2).
    """
    if order < 1:
        raise ValueError("quadrature order must be >= 1")
    i = np.arange(order)
    x = np.cos(np.pi * (i + 0.75) / (order + 0.5))
    for _ in range(100):
        p, dp = _legendre_and_deriv(order, x)
        dx = p / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    else:
        raise ConvergenceFailureError("Newton iteration for Legendre roots did not converge")
    _, dp = _legendre_and_deriv(order, x)
    w = 2.0 / ((1.0 - x**2) * dp**2)
    idx = np.argsort(x)
    return QuadratureRule(nodes=x[idx], weights=w[idx])


def eigen_sym_tridiag(diagonal, off_diagonal, count):
    """count smallest eigenvalues (ascending) of a symmetric tridiagonal matrix."""
    d = np.asarray(diagonal, dtype=float)
    e = np.asarray(off_diagonal, dtype=float)
    if count < 1 or count > d.size:
        raise ValueError("count must be between 1 and the matrix dimension")
    if d.size == 1:
        return d.copy()
    try:
        return scipy.linalg.eigvalsh_tridiagonal(d, e, select="i", select_range=(0, count - 1))
    except scipy.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure is exotic
        raise ConvergenceFailureError(str(exc)) from exc


# 4th-order one-sided second-derivative stencils (rows: at node 0, at node 1);
# mirrored for the right edge.
_EDGE0 = np.array([15 / 4, -77 / 6, 107 / 6, -13.0, 61 / 12, -5 / 6])
_EDGE1 = np.array([5 / 6, -5 / 4, -1 / 3, 7 / 6, -1 / 2, 1 / 12])


def fd_second_derivative(values, h):
    """Second derivative of uniformly spaced samples, 4th-order accurate.

    Interior: central stencil (-1/12, 4/3, -5/2, 4/3, -1/12)/h^2.
    Edges: one-sided 6-point stencils of the same order. Works for complex data.
    """
    y = np.asarray(values)
    if y.size < 6:
        raise ValueError("need at least 6 samples")
    out = np.empty_like(y, dtype=complex if y.dtype.kind == "c" else float)
    out[2:-2] = (-y[:-4] + 16 * y[1:-3] - 30 * y[2:-2] + 16 * y[3:-1] - y[4:]) / (12 * h * h)
    out[0] = np.dot(_EDGE0, y[:6]) / (h * h)
    out[1] = np.dot(_EDGE1, y[:6]) / (h * h)
    out[-1] = np.dot(_EDGE0, y[:-7:-1]) / (h * h)
    out[-2] = np.dot(_EDGE1, y[:-7:-1]) / (h * h)
    return out
