"""SL2(Z) matrices and the multipliers nu_eta, psi_{j,r} and chi_{j,r}.

All phases are assembled as exact rationals (or integer numerators over an
integer denominator) and reduced mod 1 before exponentiation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import dedekind_sum, kronecker, neg_mod_inverse, root_of_unity, unit_phase
from .errors import (
    EvenModulus,
    IndexOutOfRange,
    NonPositiveC,
    NotCoprime,
    NotUnimodular,
    UndefinedCase,
)
from .gauss import gauss_sum_odd_closed


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise NotUnimodular(f"det of {self.rows()} is not 1")

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def act(self, tau: complex) -> complex:
        return (self.a * tau + self.b) / (self.c * tau + self.d)


IDENTITY = SL2Matrix(1, 0, 0, 1)
S = SL2Matrix(0, -1, 1, 0)
T = SL2Matrix(1, 1, 0, 1)


def matrix_hk(h: int, k: int) -> SL2Matrix:
    """M_{h,k} = [[h', -(hh'+1)/k], [k, -h]] with hh' = -1 (mod k)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if math.gcd(h, k) != 1:
        raise NotCoprime(f"gcd({h}, {k}) != 1")
    hp = neg_mod_inverse(h, k)
    return SL2Matrix(hp, -(h * hp + 1) // k, k, -h)


def matrix_inverse(M: SL2Matrix) -> SL2Matrix:
    return SL2Matrix(M.d, -M.b, -M.c, M.a)


def eta_multiplier_dedekind(M: SL2Matrix) -> complex:
    """exp(pi i ((a+d)/12c - 1/4 + s(-d, c))) for c > 0."""
    a, b, c, d = M.a, M.b, M.c, M.d
    if c <= 0:
        raise NonPositiveC(f"Dedekind-sum formula needs c > 0, got c={c}")
    exponent = Fraction(a + d, 12 * c) - Fraction(1, 4) + dedekind_sum(-d, c)
    return unit_phase(exponent / 2)


def eta_multiplier_closed(M: SL2Matrix) -> complex:
    """Kronecker-symbol form of nu_eta, split by the parity of c."""
    a, b, c, d = M.a, M.b, M.c, M.d
    if c % 2:
        sym = kronecker(d, abs(c))
        num = (a + d) * c - b * d * (c * c - 1) - 3 * c
    elif c != 0 or d == 1:
        sym = kronecker(c, d)
        num = a * c * (1 - d * d) + d * (b - c + 3) - 3
    else:
        raise UndefinedCase(f"no closed eta multiplier branch for {M.rows()}")
    # e^{pi i num/12} = root of unity num/24
    return sym * root_of_unity(num, 24)


def _check_index(j: int, r: int, N: int) -> None:
    if not (1 <= j <= N - 1 and 1 <= r <= N - 1):
        raise IndexOutOfRange(f"j={j}, r={r} must lie in [1, {N - 1}]")


def _psi_rows(j: int, N: int, M: SL2Matrix) -> np.ndarray:
    """psi_{j,r}(N, M) for r = 1..N-1 as a complex array (c != 0 only)."""
    a, c, d = M.a, M.c, M.d
    ac = abs(c)
    sgn = 1 if c > 0 else -1
    ell = np.arange(ac, dtype=np.int64)
    m = 2 * N * ell + j
    r = np.arange(1, N, dtype=np.int64)
    den = 4 * N * ac
    # pi i/(2Nc) (a m^2 + d r^2) = 2 pi i * sgn(c) (a m^2 + d r^2) / (4N|c|)
    am2 = (a % den) * (m * m % den) % den
    dr2 = (d % den) * (r * r % den) % den
    num = sgn * (am2[None, :] + dr2[:, None]) % den
    phase = np.exp(2j * np.pi * num / den)
    sines = np.sin(np.pi * (r[:, None] * m[None, :] % (2 * N * ac)) / (N * ac))
    prefactor = root_of_unity(-3 * sgn, 8) * math.sqrt(2.0 / (N * ac))
    return prefactor * (phase * sines).sum(axis=1)


def psi_multiplier(j: int, r: int, N: int, M: SL2Matrix) -> complex:
    _check_index(j, r, N)
    a, b, c, d = M.a, M.b, M.c, M.d
    if c == 0:
        if j != r:
            return 0j
        # e^{2 pi i ab j^2/4N} e^{-pi i/4 (1 - sgn d)}
        return root_of_unity(a * b * j * j, 4 * N) * root_of_unity(-(1 - (1 if d > 0 else -1)), 8)
    return complex(_psi_rows(j, N, M)[r - 1])


def chi_multiplier(j: int, r: int, N: int, M: SL2Matrix) -> complex:
    """chi_{j,r}(N, M) = nu_eta(M) * psi_{j,r}(N, M^{-1})."""
    _check_index(j, r, N)
    return eta_multiplier_dedekind(M) * psi_multiplier(j, r, N, matrix_inverse(M))


def chi_row(j: int, N: int, h: int, k: int) -> np.ndarray:
    """chi_{j,r}(N, M_{h,k}) for every r = 1..N-1 at once."""
    if not 1 <= j <= N - 1:
        raise IndexOutOfRange(f"j={j} must lie in [1, {N - 1}]")
    M = matrix_hk(h, k)
    return eta_multiplier_dedekind(M) * _psi_rows(j, N, matrix_inverse(M))


def chi_via_gauss_odd(h: int, k: int, j: int, r: int, N: int) -> complex:
    """chi_{j,r}(N, M_{h,k}) for odd k rewritten through G(hN, hj +- r, k).

    The Gauss sums come from the closed form, so this is an independent
    evaluation path to compare against :func:`chi_multiplier`.
    """
    if k % 2 == 0:
        raise EvenModulus(f"k must be odd, got {k}")
    if math.gcd(h, k) != 1:
        raise NotCoprime(f"gcd({h}, {k}) != 1")
    _check_index(j, r, N)
    hp = neg_mod_inverse(h, k)
    base = Fraction((hp - h) * k - (h * hp + 1) // k * h * (k * k - 1) - 3 * k, 24) + Fraction(3, 8)
    plus = unit_phase(base + Fraction(h * j * j - hp * r * r + 2 * r * j, 4 * N * k))
    minus = unit_phase(base + Fraction(h * j * j - hp * r * r - 2 * r * j, 4 * N * k))
    scale = kronecker(-h, k) * math.sqrt(1.0 / (2 * N * k))
    g_plus = gauss_sum_odd_closed(h, N, j, r, k, 1)
    g_minus = gauss_sum_odd_closed(h, N, j, r, k, -1)
    return scale * (-1j * plus * g_plus + 1j * minus * g_minus)
