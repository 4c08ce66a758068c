import os

import numpy as np
import pytest

from xmscarf.eop import (
    admissible,
    default_quad_order,
    eop_deriv,
    eop_eval,
    eop_inner_product,
    eop_norm_sq,
    eop_ode_residual,
    eop_weight,
)
from xmscarf.errors import DegenerateParameterError
from xmscarf.jacobi import jacobi_eval


def test_admissible_basic():
    assert admissible(2.0, 1.0, 1)
    assert admissible(3.0, 3.0, 2)
    assert admissible(1.0, 1.0, 0)  # m = 0 is always admissible
    assert not admissible(2.0, 0.0, 1)  # b = 0
    assert not admissible(1.0, 1.0, 1)  # a - b - m + 1 = 0
    assert not admissible(0.0, 1.0, 2)  # a in {0..m-1}
    assert not admissible(2.0, -1.0, 2)  # sign(a-m+1) != sign(b)
    assert not admissible(0.5, 1.0, 3)  # a <= m - 2


def test_m1_closed_form():
    # with m=1, n=1 the bilinear sum collapses to -(a/(a+1)) P_1^{(-a-2,b)}(x)
    a, b = 2.0, 1.0
    xs = np.linspace(-0.9, 0.9, 11)
    assert np.allclose(eop_eval(1, a, b, 1, xs), (xs + 5) / 3, rtol=1e-14)


def test_m0_reduces_to_classical():
    xs = np.linspace(-1, 1, 13)
    for n, a, b in [(0, 1.2, 0.4), (3, 0.5, 2.5)]:
        assert np.allclose(eop_eval(n, a, b, 0, xs), jacobi_eval(n, a, b, xs), rtol=1e-13)


def test_degree_is_n():
    # leading behaviour: polynomial of exact degree n (finite nonzero n-th divided slope)
    n, a, b, m = 4, 3.0, 3.0, 2
    xs = np.linspace(-1, 1, n + 1)
    vals = eop_eval(n, a, b, m, xs)
    lead = np.polyfit(xs, vals, n)[0]
    assert abs(lead) > 1e-10


def test_degenerate_parameter_raises():
    # a + (n - m) + 1 = 0 makes the representation singular
    with pytest.raises(DegenerateParameterError):
        eop_eval(4, -3.0, -2.0, 2, 0.1)


def test_ode_residual_small():
    xs = np.linspace(-0.9, 0.9, 50)
    for m, a, b in [(1, 2.0, 1.0), (2, 3.0, 3.0), (3, 4.5, 2.0)]:
        for n in range(m, m + 4):
            res = eop_ode_residual(n, a, b, m, xs)
            scale = max(1.0, np.max(np.abs(eop_eval(n, a, b, m, xs))))
            assert np.max(res) / scale < 1e-10


def test_ode_residual_negative_control():
    # a classical Jacobi polynomial of the same degree must NOT satisfy the
    # exceptional equation
    xs = np.linspace(-0.9, 0.9, 50)
    n, a, b, m = 3, 2.0, 1.0, 1
    from xmscarf.eop import eop_ode_coeffs

    q1, r1 = eop_ode_coeffs(n, a, b, m, xs)
    y = jacobi_eval(n, a, b, xs)
    from xmscarf.jacobi import jacobi_deriv

    res = (1 - xs**2) * jacobi_deriv(n, a, b, xs, 2) + q1 * jacobi_deriv(n, a, b, xs, 1) + r1 * y
    assert np.max(np.abs(res)) > 0.1


def test_deriv_matches_finite_difference():
    n, a, b, m = 3, 3.0, 3.0, 2
    xs = np.linspace(-0.7, 0.7, 9)
    h = 1e-5
    fd1 = (eop_eval(n, a, b, m, xs + h) - eop_eval(n, a, b, m, xs - h)) / (2 * h)
    fd2 = (eop_eval(n, a, b, m, xs + h) - 2 * eop_eval(n, a, b, m, xs) + eop_eval(n, a, b, m, xs - h)) / h**2
    assert np.allclose(eop_deriv(n, a, b, m, xs, 1), fd1, rtol=1e-8, atol=1e-8)
    assert np.allclose(eop_deriv(n, a, b, m, xs, 2), fd2, rtol=1e-4, atol=1e-4)


def test_weight_shape_and_values():
    # (1-x)^a (1+x)^b / P_1^{(-a-1,b-1)}(x); the single-power denominator may be negative
    xs = np.linspace(-0.99, 0.99, 21)
    a, b = 2.0, 1.0
    w = eop_weight(a, b, 1, xs)
    assert w.shape == xs.shape
    den = jacobi_eval(1, -a - 1, b - 1, xs)
    assert np.allclose(w, (1 - xs) ** a * (1 + xs) ** b / den, rtol=1e-13)


def test_norm_closed_form():
    assert eop_norm_sq(1, 2.0, 1.0, 1) == pytest.approx(16.0 / 9.0, rel=1e-14)


def test_norm_matches_quadrature():
    for m, a, b in [(1, 2.0, 1.0), (2, 3.0, 3.0), (1, 2.5, 1.5)]:
        for n in range(m, m + 3):
            ip = eop_inner_product(n, n, a, b, m)
            assert ip == pytest.approx(eop_norm_sq(n, a, b, m), rel=1e-9)


def test_orthogonality():
    m, a, b = 2, 3.0, 3.0
    for n1 in range(m, m + 4):
        for n2 in range(n1 + 1, m + 4):
            ip = eop_inner_product(n1, n2, a, b, m)
            scale = np.sqrt(eop_norm_sq(n1, a, b, m) * eop_norm_sq(n2, a, b, m))
            assert abs(ip) / scale < 1e-12


def test_quad_order_env_override(monkeypatch):
    monkeypatch.delenv("XMSCARF_QUAD_ORDER", raising=False)
    assert default_quad_order() == 200
    monkeypatch.setenv("XMSCARF_QUAD_ORDER", "64")
    assert default_quad_order() == 64
    monkeypatch.setenv("XMSCARF_QUAD_ORDER", "3")
    with pytest.raises(ValueError):
        default_quad_order()
