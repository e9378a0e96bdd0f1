import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from falsetheta.errors import OrderOutOfRange, PoleOnBoundary, PoleOutsideInterval
from falsetheta.special import (
    bessel_i1,
    bessel_i1_derivative,
    gauss_legendre_rule,
    integrate_pv,
    integrate_smooth,
)


def series_oracle(z, terms=30):
    """Fixed-length I_1 series in exact rational arithmetic."""
    half = Fraction(z) / 2
    return float(sum(half ** (2 * m + 1) / (math.factorial(m) * math.factorial(m + 1)) for m in range(terms)))


def test_bessel_examples():
    assert bessel_i1(0.0) == 0.0
    assert bessel_i1(2.0) == pytest.approx(series_oracle(2), rel=1e-14)
    assert bessel_i1(1.0) == pytest.approx(series_oracle(1), rel=1e-14)
    assert bessel_i1(2.0) == pytest.approx(1.5906368546, abs=1e-10)
    assert bessel_i1(1.0) == pytest.approx(0.5651591040, abs=1e-10)


def test_bessel_relative_accuracy_against_mpmath():
    for z in [1e-8, 0.01, 0.5, 3.3, 10, 25, 60, 150, 400, 700]:
        want = float(mpmath.besseli(1, z))
        assert abs(bessel_i1(z) - want) <= 1e-13 * want


def test_bessel_vectorised():
    z = np.array([0.0, 1.0, 2.0, 30.0])
    out = bessel_i1(z)
    assert out.shape == z.shape
    assert all(out[i] == pytest.approx(bessel_i1(float(z[i])), rel=1e-15) for i in range(4))


def test_bessel_range_checks():
    with pytest.raises(OverflowError):
        bessel_i1(701.0)
    with pytest.raises(ValueError):
        bessel_i1(-1.0)


@pytest.mark.parametrize("z", [0.5, 2.0, 10.0])
def test_bessel_derivative_finite_difference(z):
    h = 1e-5
    fd = (bessel_i1(z + h) - bessel_i1(z - h)) / (2 * h)
    assert abs(fd - bessel_i1_derivative(z)) <= 1e-6


def test_gauss_legendre_two_point():
    rule = gauss_legendre_rule(2)
    assert [n for n, _ in rule] == pytest.approx([-1 / math.sqrt(3), 1 / math.sqrt(3)], abs=1e-15)
    assert [w for _, w in rule] == pytest.approx([1.0, 1.0], abs=1e-15)


def test_gauss_legendre_exactness():
    rule = gauss_legendre_rule(3)
    assert sum(w * x**4 for x, w in rule) == pytest.approx(2 / 5, abs=1e-15)
    for order in (2, 5, 16, 32, 64, 128):
        rule = gauss_legendre_rule(order)
        assert sum(w for _, w in rule) == pytest.approx(2.0, abs=1e-13)
        deg = 2 * order - 1
        assert sum(w * x**deg for x, w in rule) == pytest.approx(0.0, abs=1e-13)
        even = deg - 1
        assert sum(w * x**even for x, w in rule) == pytest.approx(2 / (even + 1), abs=1e-13)


def test_gauss_legendre_order_range():
    with pytest.raises(OrderOutOfRange):
        gauss_legendre_rule(1)
    with pytest.raises(OrderOutOfRange):
        gauss_legendre_rule(129)


def test_integrate_smooth_examples():
    assert integrate_smooth(lambda x: np.ones_like(x), 0, 1) == pytest.approx(1.0, abs=1e-15)
    assert integrate_smooth(np.cos, 0, math.pi / 2) == pytest.approx(1.0, abs=1e-12)


def test_integrate_smooth_against_trapezoid():
    f = lambda x: x * bessel_i1(x)
    xs = np.linspace(0, 1, 10_001)
    ys = f(xs)
    trap = float(np.sum((ys[1:] + ys[:-1]) / 2 * np.diff(xs)))
    # trapezoid error is O(h^2) ~ 1e-9 here; remove it with one Richardson step
    xs2 = np.linspace(0, 1, 20_001)
    ys2 = f(xs2)
    trap2 = float(np.sum((ys2[1:] + ys2[:-1]) / 2 * np.diff(xs2)))
    reference = (4 * trap2 - trap) / 3
    assert abs(integrate_smooth(f, 0, 1) - reference) < 1e-9
    assert abs(integrate_smooth(f, 0, 1) - trap) < 1e-8


def test_pv_examples():
    assert abs(integrate_pv(lambda x: 1 / x, -1, 1, 0)) <= 1e-10
    assert integrate_pv(lambda x: 1 / x, -1, 2, 0) == pytest.approx(math.log(2), abs=1e-10)
    for a in (0.2, 0.45, 0.9):
        assert abs(integrate_pv(lambda x: 1 / np.tan(np.pi * x), -a, a, 0)) <= 1e-10


def test_pv_known_values():
    # PV int_0^3 1/(x-1) dx = ln 2; PV int_{-1}^{2} e^x/x dx = Ei(2) - Ei(-1)
    assert integrate_pv(lambda x: 1 / (x - 1), 0, 3, 1) == pytest.approx(math.log(2), abs=1e-10)
    want = float(mpmath.ei(2) - mpmath.ei(-1))
    assert integrate_pv(lambda x: np.exp(x) / x, -1, 2, 0) == pytest.approx(want, abs=1e-10)


def test_pv_linear():
    f = lambda x: np.exp(x) / (x - 0.3)
    g = lambda x: np.cos(x) / (x - 0.3)
    a, b = 2.5, -1.5
    combo = integrate_pv(lambda x: a * f(x) + b * g(x), -1, 2, 0.3)
    assert combo == pytest.approx(a * integrate_pv(f, -1, 2, 0.3) + b * integrate_pv(g, -1, 2, 0.3), abs=1e-10)


def test_pv_errors():
    with pytest.raises(PoleOutsideInterval):
        integrate_pv(lambda x: 1 / x, 1, 2, 0)
    with pytest.raises(PoleOnBoundary):
        integrate_pv(lambda x: 1 / x, 0, 2, 0)
