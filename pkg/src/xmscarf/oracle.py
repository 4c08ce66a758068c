"""Independent numerical verification of the closed-form spectra and eigenpairs.

Two routes, both independent of the analytic formulas they certify:

* ``solve_spectrum`` discretizes H = -d^2/dx^2 + V on a uniform grid with
  Dirichlet walls (3-point Laplacian, optionally Richardson-extrapolated)
  and diagonalizes the symmetric tridiagonal matrix. Real potentials only.
* ``hamiltonian_residual`` samples the analytic wavefunction, applies H with
  a 4th-order stencil (complex arithmetic where needed) and reports the
  normalized defect max|H psi - E psi| / max|psi|. This certifies the
  non-Hermitian families without a nonsymmetric eigensolver.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SingularPointError
from .numerics import eigen_sym_tridiag, fd_second_derivative
from .potentials import HYPER, SHIFTED, TRIG, energy, potential_value, wavefunction

__all__ = [
    "GridSpec",
    "SpectrumResult",
    "VerificationReport",
    "default_grid",
    "solve_spectrum",
    "hamiltonian_residual",
    "rayleigh_quotient",
    "spectrum_match_report",
]


@dataclass(frozen=True)
class GridSpec:
    """Uniform Dirichlet grid: n_points interior nodes strictly inside [x_min, x_max]."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ValueError("x_min must be < x_max")
        if self.n_points < 100:
            raise ValueError("n_points must be >= 100")

    def interior(self, n_points=None):
        """Interior node coordinates and spacing h."""
        n = self.n_points if n_points is None else n_points
        h = (self.x_max - self.x_min) / (n + 1)
        return self.x_min + h * np.arange(1, n + 1), h


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: np.ndarray
    grid: GridSpec
    richardson_pair: np.ndarray | None = None


@dataclass
class VerificationReport:
    name: str
    tolerance: float
    defect: float
    passed: bool
    details: list = field(default_factory=list)


def default_grid(spec, n_points=4000, margin_frac=1e-3, tail=1e-8):
    """Sensible truncation box for a potential family.

    trig/shifted: the open well (-pi/2k, pi/2k) shrunk by margin_frac on each
    side. hyper: symmetric [-L, L] grown until every bound-state wavefunction
    satisfies |psi(±L)| < tail * max|psi|.
    """
    if spec.family in (TRIG, SHIFTED):
        half = math.pi / (2.0 * abs(spec.k))
        delta = margin_frac * half
        return GridSpec(-half + delta, half - delta, n_points)
    count = max(1, math.ceil(-(spec.a + spec.b + 1) / 2.0))
    L = 2.0 / abs(spec.k)
    for _ in range(60):
        ok = True
        for n in range(spec.m, spec.m + count):
            xs = np.linspace(-L, L, 257)
            psi = np.abs(wavefunction(spec, n, xs))
            if max(psi[0], psi[-1]) > tail * psi.max():
                ok = False
                break
        if ok:
            return GridSpec(-L, L, n_points)
        L *= 1.4
    raise SingularPointError("could not find a truncation box with decayed wavefunctions")


def solve_spectrum(spec, grid, count, richardson=True):
    """Lowest eigenvalues of the discretized Hamiltonian (real potentials only).

    Standard 3-point Laplacian with Dirichlet walls; with richardson=True a
    second solve at doubled resolution removes the leading O(h^2) error.
    """
    def _solve(n_points):
        x, h = grid.interior(n_points)
        v = potential_value(spec, x)
        v = np.asarray(v)
        if np.iscomplexobj(v):
            if np.max(np.abs(v.imag)) > 1e-10 * max(1.0, np.max(np.abs(v.real))):
                raise ValueError("solve_spectrum requires a real potential on the grid")
            v = v.real
        diag = 2.0 / h**2 + v
        off = np.full(x.size - 1, -1.0 / h**2)
        return eigen_sym_tridiag(diag, off, count)

    coarse = _solve(grid.n_points)
    if not richardson:
        return SpectrumResult(eigenvalues=coarse, grid=grid)
    fine = _solve(2 * grid.n_points)
    extrapolated = (4.0 * fine - coarse) / 3.0
    return SpectrumResult(eigenvalues=extrapolated, grid=grid, richardson_pair=coarse)


def _sampled_eigenpair(spec, n, grid):
    x, h = grid.interior()
    psi = np.asarray(wavefunction(spec, n, x))
    v = np.asarray(potential_value(spec, x))
    h_psi = -fd_second_derivative(psi, h) + v * psi
    return x, h, psi, h_psi


def hamiltonian_residual(spec, n, grid, edge_frac=0.05):
    """max |H psi_n - E_n psi_n| / max|psi_n| over interior grid points.

    The outer edge_frac of points on each side is excluded: the one-sided
    stencil meets the steep potential wall there and would report pure
    discretization noise.
    """
    x, h, psi, h_psi = _sampled_eigenpair(spec, n, grid)
    e = energy(spec, n)
    defect = np.abs(h_psi - e * psi)
    cut = max(3, int(edge_frac * x.size))
    return float(defect[cut:-cut].max() / np.abs(psi).max())


def rayleigh_quotient(spec, n, grid):
    """<psi, H psi> / <psi, psi> with the standard (conjugated) inner product."""
    _, _, psi, h_psi = _sampled_eigenpair(spec, n, grid)
    return complex(np.vdot(psi, h_psi) / np.vdot(psi, psi))


def spectrum_match_report(spec, count, tolerance, grid=None):
    """Compare the discretized spectrum against the closed-form energies."""
    if grid is None:
        grid = default_grid(spec)
    result = solve_spectrum(spec, grid, count)
    details = []
    worst = 0.0
    for level, e_num in enumerate(result.eigenvalues):
        n = spec.m + level
        e_exact = energy(spec, n)
        rel = abs(e_num - e_exact) / max(abs(e_exact), 1e-30)
        worst = max(worst, rel)
        details.append({"n": n, "analytic": e_exact, "numeric": float(e_num), "rel_error": rel})
    return VerificationReport(
        name=f"spectrum:{spec.family}:m={spec.m}",
        tolerance=tolerance,
        defect=worst,
        passed=worst < tolerance,
        details=details,
    )
