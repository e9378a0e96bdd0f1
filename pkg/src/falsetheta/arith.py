"""Exact integer and rational primitives.

Everything here works on Python ints (arbitrary precision) and
``fractions.Fraction``; no floating point except :func:`epsilon_m`.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction

from .errors import EvenArgument, NotCoprime

# Dedekind sums are returned as Fraction: numerator/denominator normalised,
# denominator > 0.
ExactRational = Fraction


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def neg_mod_inverse(h: int, k: int) -> int:
    """Return h' in [0, k) with h*h' = -1 (mod k)."""
    if k < 1:
        raise ValueError(f"modulus must be positive, got {k}")
    if k == 1:
        return 0
    if math.gcd(h, k) != 1:
        raise NotCoprime(f"gcd({h}, {k}) != 1")
    return (-pow(h, -1, k)) % k


def neg_mod_inverse_lifted(h: int, k: int, x: int) -> int:
    """Negative inverse of h modulo x*k.

    The result also reduces to ``neg_mod_inverse(h, k)`` modulo k, since any
    solution mod xk is a solution mod k.
    """
    if x < 1:
        raise ValueError(f"lift factor must be positive, got {x}")
    return neg_mod_inverse(h, k * x)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for every pair of integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out powers of two from n: (a/2) = 0 for even a, else +-1 by a mod 8
    v = (n & -n).bit_length() - 1
    if v:
        if a % 2 == 0:
            return 0
        n >>= v
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # n is now odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def dedekind_sum(h: int, k: int) -> Fraction:
    """Dedekind sum s(h, k) via the reciprocity law.

    Uses s(h, k) + s(k, h) = (h/k + k/h + 1/(hk))/12 - 1/4 together with
    s(h mod k, k) = s(h, k) and s(-h, k) = -s(h, k), so the cost is that of
    Euclid's algorithm.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if math.gcd(h, k) != 1:
        raise NotCoprime(f"gcd({h}, {k}) != 1")
    total = Fraction(0)
    sign = 1
    h %= k
    while k > 1:
        if h == 0:
            break
        if 2 * h > k:
            # s(h, k) = -s(k - h, k) keeps the recursion shallow
            h = k - h
            sign = -sign
        total += sign * (Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k)) / 12 - sign * Fraction(1, 4)
        sign = -sign
        h, k = k % h, h
    return total


def epsilon_m(m: int) -> complex:
    """1 for m = 1 (mod 4), i for m = 3 (mod 4); m must be odd."""
    if m % 2 == 0:
        raise EvenArgument(f"epsilon_m needs odd m, got {m}")
    return 1 + 0j if m % 4 == 1 else 1j


_partition_lock = threading.Lock()
_partition_memo: list[int] = [1]


def _extend_partitions(n: int) -> None:
    with _partition_lock:
        memo = _partition_memo
        for m in range(len(memo), n + 1):
            total = 0
            i = 1
            while True:
                g1 = i * (3 * i - 1) // 2
                if g1 > m:
                    break
                s = 1 if i % 2 else -1
                total += s * memo[m - g1]
                g2 = g1 + i
                if g2 <= m:
                    total += s * memo[m - g2]
                i += 1
            memo.append(total)


def partition(n: int) -> int:
    """Number of partitions p(n), from Euler's pentagonal recurrence."""
    if n < 0:
        raise ValueError(f"partition needs n >= 0, got {n}")
    if n >= len(_partition_memo):
        _extend_partitions(n)
    return _partition_memo[n]


def partition_table(n_max: int) -> list[int]:
    """p(0), ..., p(n_max) as a fresh list (safe to share read-only)."""
    partition(n_max)
    return _partition_memo[: n_max + 1]


def unit_phase(x: Fraction) -> complex:
    """exp(2*pi*i*x) for rational x, with x reduced mod 1 exactly first."""
    x = Fraction(x)
    r = x.numerator % x.denominator
    return complex(math.cos(2 * math.pi * r / x.denominator), math.sin(2 * math.pi * r / x.denominator))


def root_of_unity(num: int, den: int) -> complex:
    """exp(2*pi*i*num/den) with num reduced mod den in integer arithmetic."""
    r = num % den
    t = 2 * math.pi * r / den
    return complex(math.cos(t), math.sin(t))
