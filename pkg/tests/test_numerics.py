import math

import numpy as np
import pytest

from xmscarf.numerics import eigen_sym_tridiag, fd_second_derivative, gauss_legendre


def test_low_order_rules():
    r1 = gauss_legendre(1)
    assert r1.nodes == pytest.approx([0.0])
    assert r1.weights == pytest.approx([2.0])
    r2 = gauss_legendre(2)
    assert np.allclose(np.sort(r2.nodes), [-1 / math.sqrt(3), 1 / math.sqrt(3)], atol=1e-15)
    assert r2.weights == pytest.approx([1.0, 1.0])


def test_weights_sum_to_two():
    for order in (5, 20, 100):
        rule = gauss_legendre(order)
        assert np.sum(rule.weights) == pytest.approx(2.0, abs=1e-14)
        assert np.all(np.diff(rule.nodes) > 0)


def test_polynomial_exactness():
    # an order-n rule integrates monomials up to degree 2n-1 exactly
    rule = gauss_legendre(21)
    for p in range(0, 42):
        exact = 0.0 if p % 2 else 2.0 / (p + 1)
        quad = float(np.sum(rule.weights * rule.nodes**p))
        assert quad == pytest.approx(exact, abs=1e-12)


def test_exactness_boundary():
    # degree 2n is the first degree an order-n rule misses
    rule = gauss_legendre(5)
    quad = float(np.sum(rule.weights * rule.nodes**10))
    assert abs(quad - 2.0 / 11.0) > 1e-8
    assert float(np.sum(rule.weights * rule.nodes**8)) == pytest.approx(2.0 / 9.0, abs=1e-14)


def test_tridiag_3x3_analytic():
    # eigenvalues of tridiag(2; -1) of size 3 are 2 - sqrt(2), 2, 2 + sqrt(2)
    vals = eigen_sym_tridiag(np.full(3, 2.0), np.full(2, -1.0), 3)
    assert np.allclose(vals, [2 - math.sqrt(2), 2.0, 2 + math.sqrt(2)], atol=1e-12)


def test_tridiag_laplacian_spectrum():
    n = 50
    vals = eigen_sym_tridiag(np.full(n, 2.0), np.full(n - 1, -1.0), 5)
    expect = [2 - 2 * math.cos(j * math.pi / (n + 1)) for j in range(1, 6)]
    assert np.allclose(vals, expect, atol=1e-12)


def test_tridiag_count():
    vals = eigen_sym_tridiag(np.arange(10.0), np.zeros(9), 4)
    assert np.allclose(vals, [0, 1, 2, 3])


def test_fd_fourth_order_convergence():
    f = np.sin
    errs = []
    for n in (100, 200, 400):
        x = np.linspace(0.0, 2.0, n + 1)
        h = x[1] - x[0]
        approx = fd_second_derivative(f(x), h)
        errs.append(np.max(np.abs(approx + np.sin(x))))
    slope1 = math.log2(errs[0] / errs[1])
    slope2 = math.log2(errs[1] / errs[2])
    assert 3.7 < slope1 < 4.3
    assert 3.7 < slope2 < 4.3


def test_fd_exact_on_cubic():
    x = np.linspace(-1, 1, 30)
    h = x[1] - x[0]
    vals = x**3 + 2 * x**2 - x
    assert np.allclose(fd_second_derivative(vals, h), 6 * x + 4, atol=1e-10)


def test_fd_complex_input():
    x = np.linspace(0, 1, 200)
    h = x[1] - x[0]
    vals = np.exp(1j * x)
    out = fd_second_derivative(vals, h)
    assert np.allclose(out, -np.exp(1j * x), atol=1e-8)
