import math
from fractions import Fraction

import numpy as np
import pytest

from falsetheta.errors import IndexOutOfRange, InvalidN, ZeroN
from falsetheta.series import (
    CoefficientParams,
    coefficient_exact,
    coefficient_table,
    false_theta_truncation,
    is_excluded_N,
)


def inverse_euler_product(n_max):
    """Coefficients of 1/prod(1 - q^m), by dividing out one factor at a time."""
    coeffs = [1] + [0] * n_max
    for m in range(1, n_max + 1):
        for n in range(m, n_max + 1):
            coeffs[n] += coeffs[n - m]
    return coeffs


def product_oracle(j, N, n_max):
    """a_{j,N}(0..n_max) by multiplying the truncated false theta series with 1/eta."""
    shifted = [0] * (n_max + 1)
    cap = Fraction(j * j, 4 * N) + n_max
    for exponent, sign in false_theta_truncation(j, N, cap):
        shift = exponent - Fraction(j * j, 4 * N)
        assert shift.denominator == 1
        shifted[int(shift)] += sign
    inv = inverse_euler_product(n_max)
    return [sum(shifted[s] * inv[n - s] for s in range(n + 1)) for n in range(n_max + 1)]


@pytest.mark.parametrize(
    "j,N,n,expected",
    [(1, 3, 3, 2), (3, 10, 18, 336), (5, 8, 10, 27), (1, 3, 18, 272)],
)
def test_exact_examples(j, N, n, expected):
    assert coefficient_exact(CoefficientParams(j, N, n)) == expected


def test_constant_term_is_one():
    for N in range(2, 13):
        for j in range(1, N):
            assert coefficient_exact(CoefficientParams(j, N, 0)) == 1


def test_table_matches_pointwise_and_product():
    for j, N in ((1, 3), (5, 8), (3, 10), (1, 2), (4, 7)):
        table = coefficient_table(j, N, 40)
        assert table[0] == 1
        assert table == [coefficient_exact(CoefficientParams(j, N, n)) for n in range(41)]
        assert table == product_oracle(j, N, 40)
    assert coefficient_table(1, 3, 3)[3] == 2
    assert coefficient_table(5, 8, 10)[10] == 27


def test_false_theta_examples():
    assert false_theta_truncation(0, 3, 50) == []
    assert false_theta_truncation(1, 3, 5) == [(Fraction(1, 12), 1), (Fraction(25, 12), -1), (Fraction(49, 12), 1)]


def test_false_theta_symmetries():
    for N in (2, 3, 5, 8):
        for j in range(-2 * N, 3 * N):
            base = false_theta_truncation(j, N, 40)
            assert false_theta_truncation(j + 2 * N, N, 40) == base
            assert false_theta_truncation(j - 2 * N, N, 40) == base
            assert false_theta_truncation(-j, N, 40) == [(e, -s) for e, s in base]


def _eta(q_tau_power_24, q):
    prod = 1.0
    for m in range(1, 201):
        prod *= 1 - q**m
    return q_tau_power_24 * prod


@pytest.mark.parametrize("j,N", [(1, 3), (5, 8), (3, 10)])
def test_series_agrees_with_direct_evaluation_at_i(j, N):
    q = math.exp(-2 * math.pi)
    theta = sum(s * q ** float(e) for e, s in false_theta_truncation(j, N, 60))
    direct = theta / _eta(math.exp(-2 * math.pi / 24), q)
    table = coefficient_table(j, N, 40)
    series = q ** (j * j / (4 * N) - 1 / 24) * sum(a * q**n for n, a in enumerate(table))
    assert abs(series - direct) <= 1e-8 * abs(direct)


def test_params_validation():
    with pytest.raises(IndexOutOfRange):
        CoefficientParams(0, 3, 1)
    with pytest.raises(IndexOutOfRange):
        CoefficientParams(3, 3, 1)
    with pytest.raises(IndexOutOfRange):
        CoefficientParams(1, 1, 1)
    assert CoefficientParams(1, 3, 3).g == Fraction(3) + Fraction(1, 12) - Fraction(1, 24)
    assert CoefficientParams(1, 3, 1).g > 0


def test_excluded_N():
    assert [N for N in range(2, 220) if is_excluded_N(N)] == [6, 24, 54, 96, 150, 216]
    with pytest.raises(InvalidN):
        CoefficientParams(1, 24, 3).check_rademacher()
    with pytest.raises(ZeroN):
        CoefficientParams(1, 3, 0).check_rademacher()
