"""Generalized quadratic Gauss sums G(a, b, c) = sum_{s mod c} e((a s^2 + b s)/c).

``gauss_sum_direct`` is the definition. The closed forms below are used as
an independent route in the identity suites.
"""
from __future__ import annotations

import math

import numpy as np

from .arith import epsilon_m, kronecker, neg_mod_inverse, root_of_unity
from .errors import EvenModulus, NotCoprime, OddModulus


def gauss_sum_direct(a: int, b: int, c: int) -> complex:
    if c < 1:
        raise ValueError(f"modulus must be positive, got {c}")
    s = np.arange(c, dtype=np.int64)
    # exact integer numerators reduced mod c before exponentiation
    num = ((a % c) * (s * s % c) + (b % c) * s) % c
    return complex(np.exp(2j * np.pi * num / c).sum())


def gauss_sums_all_b(a: int, c: int) -> np.ndarray:
    """G(a, b, c) for b = 0..c-1 at once; the b-dependence is a length-c DFT."""
    if c < 1:
        raise ValueError(f"modulus must be positive, got {c}")
    s = np.arange(c, dtype=np.int64)
    x = np.exp(2j * np.pi * ((a % c) * (s * s % c) % c) / c)
    return np.fft.ifft(x) * c


def _psi_star(a: int, m: int) -> int:
    """A solution psi of 4*psi*a = 1 (mod m), m odd, as [4]'[a]' mod m."""
    if m == 1:
        return 0
    return neg_mod_inverse(4, m) * neg_mod_inverse(a, m) % m


def _gauss_odd(a: int, b: int, c: int) -> complex:
    """Closed form for odd c and arbitrary a, b."""
    g = math.gcd(a, c)
    if b % g:
        return 0j
    c1 = c // g
    if c1 == 1:
        return complex(g)
    a1, b1 = a // g, b // g
    psi = _psi_star(a1, c1)
    return g * epsilon_m(c1) * math.sqrt(c1) * kronecker(a1, c1) * root_of_unity(-psi * b1 * b1, c1)


def _gauss_two_power(a: int, b: int, nu: int) -> complex:
    """Closed form for G(a, b, 2^nu), nu >= 1."""
    q = 1 << nu
    alpha = (a & -a).bit_length() - 1 if a else nu
    if alpha >= nu:
        # a s^2 vanishes mod 2^nu
        return complex(q) if b % q == 0 else 0j
    if b % (1 << alpha):
        return 0j
    a1, b1, nu1 = a >> alpha, b >> alpha, nu - alpha
    scale = 1 << alpha
    if nu1 == 1:
        return complex(2 * scale) if b1 % 2 else 0j
    if b1 % 2:
        return 0j
    q1 = 1 << nu1
    half = b1 // 2
    inv = pow(a1, -1, q1)
    # completing the square: a s^2 + b s = a (s + a^{-1} b/2)^2 - a^{-1} (b/2)^2
    unit = (1 + 1j) * kronecker(-q1, a1) * epsilon_m(a1)
    return scale * math.sqrt(q1) * unit * root_of_unity(-inv * half * half, q1)


def gauss_sum_odd_closed(h: int, N: int, j: int, r: int, k: int, sign: int) -> complex:
    """G(hN, hj + sign*r, k) for odd k via the reduced-modulus closed form.

    With g = gcd(N, k): zero unless g divides hj +- r, otherwise
    g * eps_{k/g} * sqrt(k/g) * (Nh/g | k/g) * e(-psi* ((hj +- r)/g)^2 / (k/g))
    where 4 psi* (Nh/g) = 1 mod k/g.
    """
    if k % 2 == 0:
        raise EvenModulus(f"k must be odd, got {k}")
    if math.gcd(h, k) != 1:
        raise NotCoprime(f"gcd({h}, {k}) != 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    # gcd(hN, k) = gcd(N, k) because h is a unit mod k
    return _gauss_odd(h * N, h * j + sign * r, k)


def gauss_sum_even_closed(h: int, N: int, b: int, k: int) -> complex:
    """G(hN, b, k) for even k = 2^nu * mu, split as G(hN 2^nu, b, mu) * G(hN mu, b, 2^nu)."""
    if k % 2:
        raise OddModulus(f"k must be even, got {k}")
    if h % 2 == 0 or math.gcd(h, k) != 1:
        raise NotCoprime(f"h={h} must be odd and coprime to k={k}")
    nu = (k & -k).bit_length() - 1
    mu = k >> nu
    a = h * N
    odd_part = _gauss_odd(a << nu, b, mu) if mu > 1 else 1 + 0j
    return odd_part * _gauss_two_power(a * mu, b, nu)


def sin_sum_identity_check(h: int, k: int, j: int, r: int, N: int) -> float:
    """|LHS - RHS| for the sin-sum to Gauss-sum rewriting; both sides summed directly."""
    if math.gcd(h, k) != 1:
        raise NotCoprime(f"gcd({h}, {k}) != 1")
    hp = neg_mod_inverse(h, k)
    den = 4 * N * k
    lhs = 0j
    for s in range(k):
        m = 2 * N * s + j
        # exp(-(pi i / 2Nk)(-h m^2 + h' r^2)) = e((h m^2 - h' r^2) / 4Nk)
        lhs += root_of_unity(h * m * m - hp * r * r, den) * math.sin(math.pi * r * m / (N * k))
    plus = root_of_unity(h * j * j - hp * r * r + 2 * r * j, den) * gauss_sum_direct(h * N, h * j + r, k)
    minus = root_of_unity(h * j * j - hp * r * r - 2 * r * j, den) * gauss_sum_direct(h * N, h * j - r, k)
    rhs = (plus - minus) / 2j
    return abs(lhs - rhs)
