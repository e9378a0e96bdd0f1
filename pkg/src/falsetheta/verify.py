"""Cross-identity suites: each pairs two independent evaluation routes and
reports the largest disagreement seen on a grid."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gauss import (
    gauss_sum_direct,
    gauss_sum_even_closed,
    gauss_sum_odd_closed,
    gauss_sums_all_b,
    sin_sum_identity_check,
)
from .kloosterman import kloosterman_block
from .multipliers import (
    chi_multiplier,
    chi_via_gauss_odd,
    eta_multiplier_closed,
    eta_multiplier_dedekind,
    matrix_hk,
)
from .special import integrate_pv

GRIDS = {
    "default": dict(eta_k=30, odd_k=25, odd_N=10, even_k=24, even_N=8, mult_cd=30, mult_a=10,
                    sin_k=20, sin_N=8, chi_k=21, chi_N=(3, 4, 5, 8, 10), kl_k=40),
    "large": dict(eta_k=80, odd_k=41, odd_N=12, even_k=40, even_N=12, mult_cd=40, mult_a=12,
                  sin_k=30, sin_N=10, chi_k=31, chi_N=(3, 4, 5, 7, 8, 10, 12), kl_k=60),
}


@dataclass
class SuiteResult:
    name: str
    max_residual: float
    tolerance: float
    cases: int

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


def _units(k):
    return [h for h in range(k) if math.gcd(h, k) == 1]


def eta_dual(k_max: int) -> SuiteResult:
    worst, n = 0.0, 0
    for k in range(1, k_max + 1):
        for h in _units(k):
            M = matrix_hk(h, k)
            worst = max(worst, abs(eta_multiplier_dedekind(M) - eta_multiplier_closed(M)))
            n += 1
    return SuiteResult("eta multiplier: Dedekind sum vs Kronecker form", worst, 1e-12, n)


def gauss_odd(k_max: int, N_max: int) -> SuiteResult:
    worst, n = 0.0, 0
    for k in range(1, k_max + 1, 2):
        for N in range(1, N_max + 1):
            for h in _units(k):
                for j in range(N):
                    for r in range(N):
                        for sign in (1, -1):
                            got = gauss_sum_odd_closed(h, N, j, r, k, sign)
                            want = gauss_sum_direct(h * N, h * j + sign * r, k)
                            worst = max(worst, abs(got - want))
                            n += 1
    return SuiteResult("Gauss sum odd k: closed form vs direct", worst, 1e-9, n)


def gauss_even(k_max: int, N_max: int) -> SuiteResult:
    worst, n = 0.0, 0
    for k in range(2, k_max + 1, 2):
        for N in range(1, N_max + 1):
            for h in _units(k):
                for b in range(k):
                    got = gauss_sum_even_closed(h, N, b, k)
                    worst = max(worst, abs(got - gauss_sum_direct(h * N, b, k)))
                    n += 1
    return SuiteResult("Gauss sum even k: closed form vs direct", worst, 1e-9, n)


def gauss_multiplicative(cd_max: int, a_max: int) -> SuiteResult:
    """G(a, b, cd) = G(ac, b, d) G(ad, b, c) for coprime c, d."""
    worst, n = 0.0, 0
    for c in range(1, cd_max + 1):
        for d in range(1, cd_max + 1):
            if math.gcd(c, d) != 1:
                continue
            b = np.arange(c * d)
            for a in range(1, a_max + 1):
                lhs = gauss_sums_all_b(a, c * d)
                rhs = gauss_sums_all_b(a * c, d)[b % d] * gauss_sums_all_b(a * d, c)[b % c]
                worst = max(worst, float(np.max(np.abs(lhs - rhs))))
                n += len(b)
    return SuiteResult("Gauss sum multiplicativity", worst, 1e-9, n)


def sin_sum(k_max: int, N_max: int) -> SuiteResult:
    worst, n = 0.0, 0
    for k in range(1, k_max + 1):
        for N in range(2, N_max + 1):
            for h in _units(k):
                for j in range(1, N):
                    for r in range(1, N):
                        worst = max(worst, sin_sum_identity_check(h, k, j, r, N))
                        n += 1
    return SuiteResult("sin sum vs Gauss sum rewriting", worst, 1e-9, n)


def chi_gauss(k_max: int, Ns) -> SuiteResult:
    worst, n = 0.0, 0
    for k in range(1, k_max + 1, 2):
        for N in Ns:
            for h in _units(k):
                M = matrix_hk(h, k)
                for j in range(1, N):
                    for r in range(1, N):
                        diff = abs(chi_via_gauss_odd(h, k, j, r, N) - chi_multiplier(j, r, N, M))
                        worst = max(worst, diff)
                        n += 1
    return SuiteResult("chi via Gauss sums (odd k) vs chi", worst, 1e-9, n)


def kloosterman_periodicity(k_max: int, cases=((1, 3), (5, 8), (3, 10)), ns=(1, 3, 10)) -> SuiteResult:
    worst, n = 0.0, 0
    for k in range(1, k_max + 1):
        for j, N in cases:
            base = kloosterman_block(k, j, N, ns)
            for shift in (k, 3 * k, -2 * k):
                other = kloosterman_block(k, j, N, ns, kappa_offset=shift)
                worst = max(worst, float(np.max(np.abs(base - other))))
                n += base.size
    return SuiteResult("Kloosterman sum kappa -> kappa + k periodicity", worst, 1e-12, n)


def pv_oddness() -> SuiteResult:
    cases = [
        (lambda x: 1.0 / x, -1.0, 1.0),
        (lambda x: 1.0 / np.tan(np.pi * x), -0.4, 0.4),
        (lambda x: 1.0 / np.tan(np.pi * x), -0.9, 0.9),
        (lambda x: np.cos(x) / x, -2.0, 2.0),
        (lambda x: 1.0 / np.sin(3 * x), -0.7, 0.7),
    ]
    worst = max(abs(integrate_pv(f, a, b, 0.0)) for f, a, b in cases)
    return SuiteResult("principal value of odd integrands", worst, 1e-10, len(cases))


def run_suites(grid: str = "default") -> list[SuiteResult]:
    if grid not in GRIDS:
        raise ValueError(f"unknown grid {grid!r}; choose from {sorted(GRIDS)}")
    g = GRIDS[grid]
    return [
        eta_dual(g["eta_k"]),
        gauss_odd(g["odd_k"], g["odd_N"]),
        gauss_even(g["even_k"], g["even_N"]),
        gauss_multiplicative(g["mult_cd"], g["mult_a"]),
        sin_sum(g["sin_k"], g["sin_N"]),
        chi_gauss(g["chi_k"], g["chi_N"]),
        kloosterman_periodicity(g["kl_k"]),
        pv_oddness(),
    ]
