"""Exact Fourier coefficients of F_{j,N}/eta from the q-series.

Write m = j + 2Nt for the false theta index. Then

    F_{j,N} = q^{j^2/4N} sum_t sgn(j + 2Nt) q^{jt + Nt^2},
    1/eta   = q^{-1/24}  sum_l p(l) q^l,

so with A_{j,N} = q^{j^2/4N - 1/24} sum_n a_{j,N}(n) q^n we get

    a_{j,N}(n) = sum_{t : jt + Nt^2 <= n} sgn(j + 2Nt) p(n - jt - Nt^2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import partition, partition_table
from .errors import IndexOutOfRange, InvalidN, ZeroN


@dataclass(frozen=True)
class CoefficientParams:
    j: int
    N: int
    n: int

    def __post_init__(self):
        if self.N < 2:
            raise IndexOutOfRange(f"N must be at least 2, got {self.N}")
        if not 1 <= self.j <= self.N - 1:
            raise IndexOutOfRange(f"j={self.j} must lie in [1, {self.N - 1}]")
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")

    @property
    def g(self) -> Fraction:
        """n + j^2/4N - 1/24."""
        return self.n + Fraction(self.j * self.j, 4 * self.N) - Fraction(1, 24)

    def check_rademacher(self) -> None:
        """Raise unless the exact formula applies (n >= 1, sqrt(N/6) not an integer)."""
        if is_excluded_N(self.N):
            raise InvalidN(
                f"N={self.N} is excluded by theorem hypothesis sqrt(N/6) integer"
            )
        if self.n == 0:
            raise ZeroN("the convergent series does not hold for n = 0")


def is_excluded_N(N: int) -> bool:
    if N % 6:
        return False
    m = math.isqrt(N // 6)
    return m * m * 6 == N


def _shifts(j: int, N: int, n: int):
    """Yield (sign, shift) with shift = jt + Nt^2 <= n."""
    t_max = 1 + math.isqrt(n // N + 1)
    for t in range(-t_max - 1, t_max + 2):
        m = j + 2 * N * t
        if m == 0:
            continue
        shift = j * t + N * t * t
        if 0 <= shift <= n:
            yield (1 if m > 0 else -1), shift


def coefficient_exact(params: CoefficientParams) -> int:
    j, N, n = params.j, params.N, params.n
    return sum(sign * partition(n - shift) for sign, shift in _shifts(j, N, n))


def coefficient_table(j: int, N: int, n_max: int) -> list[int]:
    CoefficientParams(j, N, 0)
    p = partition_table(n_max)
    table = [0] * (n_max + 1)
    for sign, shift in _shifts(j, N, n_max):
        for n in range(shift, n_max + 1):
            table[n] += sign * p[n - shift]
    return table


def false_theta_truncation(j: int, N: int, exponent_cap) -> list[tuple[Fraction, int]]:
    """Terms sgn(m) q^{m^2/4N}, m = j (mod 2N), m^2/4N <= cap, ordered by |m|."""
    if N < 2:
        raise ValueError(f"N must be at least 2, got {N}")
    cap = Fraction(exponent_cap)
    if cap < 0:
        return []
    m_max = math.isqrt(math.floor(cap * 4 * N))
    terms = []
    for m in range(-m_max, m_max + 1):
        if m == 0 or (m - j) % (2 * N):
            continue
        e = Fraction(m * m, 4 * N)
        if e <= cap:
            terms.append((e, 1 if m > 0 else -1))
    # m and -m share the class exactly when j = 0 or N (mod 2N); they cancel
    merged: dict[Fraction, int] = {}
    for e, s in terms:
        merged[e] = merged.get(e, 0) + s
    return sorted(((e, s) for e, s in merged.items() if s), key=lambda t: t[0])
