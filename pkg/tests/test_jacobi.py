import numpy as np
import pytest

from xmscarf.jacobi import gen_binom, jacobi_coeffs, jacobi_deriv, jacobi_eval


def eval_from_coeffs(n, a, b, x):
    return sum(c * x**i for i, c in enumerate(jacobi_coeffs(n, a, b)))


def test_gen_binom_values():
    assert gen_binom(5, 2) == pytest.approx(10.0)
    assert gen_binom(2.5, 2) == pytest.approx(1.875)
    assert gen_binom(-1.5, 1) == pytest.approx(-1.5)
    assert gen_binom(3.7, 0) == 1.0


def test_low_degrees():
    x = np.linspace(-1, 1, 11)
    assert np.allclose(jacobi_eval(0, 1.2, -0.4, x), 1.0)
    # P_1^{(a,b)}(x) = (a+b+2)x/2 + (a-b)/2
    a, b = 0.7, 1.9
    assert np.allclose(jacobi_eval(1, a, b, x), (a + b + 2) * x / 2 + (a - b) / 2)


def test_known_value():
    # P_2^{(1,1)}(x) = (15x^2 - 3)/4
    assert jacobi_eval(2, 1, 1, 0.5) == pytest.approx(0.1875)
    assert jacobi_eval(2, 1, 1, -1.0) == pytest.approx(3.0)


def test_matches_coefficient_expansion():
    xs = np.linspace(-0.9, 0.9, 7)
    for n, a, b in [(3, 0.5, -0.3), (5, -1.2, 2.4), (4, 2.0, 2.0), (6, -0.9, -0.1)]:
        expect = eval_from_coeffs(n, a, b, xs)
        assert np.allclose(jacobi_eval(n, a, b, xs), expect, rtol=1e-13, atol=1e-13)


def test_endpoint_values():
    # P_n^{(a,b)}(1) = C(n+a, n)
    for n, a, b in [(3, 1.5, 0.2), (4, -0.4, 1.1)]:
        assert jacobi_eval(n, a, b, 1.0) == pytest.approx(gen_binom(n + a, n))


def test_reflection_symmetry():
    xs = np.linspace(-0.95, 0.95, 9)
    for n, a, b in [(4, 0.8, 1.6), (5, -0.5, 2.2)]:
        lhs = jacobi_eval(n, a, b, -xs)
        rhs = (-1) ** n * jacobi_eval(n, b, a, xs)
        assert np.allclose(lhs, rhs, rtol=1e-13, atol=1e-14)


def test_derivative_value():
    # P_2^{(1,1)}(x) = (15x^2-3)/4, so the derivative at 0.5 is 7.5*0.5
    assert jacobi_deriv(2, 1, 1, 0.5, 1) == pytest.approx(3.75)


def test_derivative_matches_coefficients():
    xs = np.linspace(-0.8, 0.8, 5)
    for n, a, b in [(4, 0.3, 1.7), (5, -1.4, 0.9)]:
        coeffs = jacobi_coeffs(n, a, b)
        d1 = sum(i * c * xs ** (i - 1) for i, c in enumerate(coeffs) if i >= 1)
        d2 = sum(i * (i - 1) * c * xs ** (i - 2) for i, c in enumerate(coeffs) if i >= 2)
        assert np.allclose(jacobi_deriv(n, a, b, xs, 1), d1, rtol=1e-12, atol=1e-12)
        assert np.allclose(jacobi_deriv(n, a, b, xs, 2), d2, rtol=1e-12, atol=1e-12)


def test_derivative_at_gamma_pole_parameters():
    # prefactor (n+a+b+1)...(n+a+b+r)/2^r stays finite when n+a+b+1 <= 0
    n, a, b = 3, -2.0, -2.0
    coeffs = jacobi_coeffs(n, a, b)
    xs = np.linspace(-0.7, 0.7, 5)
    d1 = sum(i * c * xs ** (i - 1) for i, c in enumerate(coeffs) if i >= 1)
    assert np.allclose(jacobi_deriv(n, a, b, xs, 1), d1, rtol=1e-12, atol=1e-12)


def test_classical_ode():
    xs = np.linspace(-0.9, 0.9, 21)
    for n, a, b in [(5, 1.1, -0.6), (7, -0.8, 2.3)]:
        y = jacobi_eval(n, a, b, xs)
        y1 = jacobi_deriv(n, a, b, xs, 1)
        y2 = jacobi_deriv(n, a, b, xs, 2)
        res = (1 - xs**2) * y2 + (b - a - (a + b + 2) * xs) * y1 + n * (n + a + b + 1) * y
        assert np.max(np.abs(res)) < 1e-10 * max(1.0, np.max(np.abs(y)))


def test_scalar_and_array_shapes():
    assert np.isscalar(jacobi_eval(3, 1.0, 2.0, 0.25)) or np.ndim(jacobi_eval(3, 1.0, 2.0, 0.25)) == 0
    out = jacobi_eval(3, 1.0, 2.0, np.zeros((2, 3)))
    assert out.shape == (2, 3)


def test_complex_argument():
    z = 0.3 + 0.4j
    coeffs = jacobi_coeffs(3, 0.5, 1.5)
    expect = sum(c * z**i for i, c in enumerate(coeffs))
    assert jacobi_eval(3, 0.5, 1.5, z) == pytest.approx(expect)


def test_negative_degree_is_zero():
    assert jacobi_eval(-1, 1.0, 1.0, 0.3) == 0.0
