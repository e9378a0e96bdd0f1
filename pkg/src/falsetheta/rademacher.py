"""Truncated exact formula for a_{j,N}(n).

    S_J = -(2 pi i / sqrt(g)) sum_{k<=J} sum_{r=1}^{N-1} sum_{kappa<k}
              K_{k,j,N}(n, r, kappa) / k^2 * T(k, kappa, r)

    T = PV int_{-X}^{X} sqrt(1/24 - N x^2) cot(pi(-x + kappa + r/2N)/k)
                        I_1((4 pi sqrt(g)/k) sqrt(1/24 - N x^2)) dx,   X = 1/sqrt(24N)

with g = n + j^2/4N - 1/24. The integrals are taken in the variable
x = X sin(theta): the square-root kernel becomes cos(theta)/sqrt(24) and the
integrand is smooth up to the endpoints, so Gauss-Legendre converges
geometrically. The only pole in range sits at x = r/2N, which happens exactly
when kappa = 0 and 6 r^2 < N.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from functools import partial

import numpy as np

from ._parallel import ordered_map
from .kloosterman import KloostermanKey, kloosterman_block, kloosterman_sum
from .series import CoefficientParams, coefficient_exact
from .special import bessel_i1, composite_nodes, integrate_pv, integrate_smooth


@dataclass(frozen=True)
class QuadConfig:
    order: int = 32
    panels: int = 8


DEFAULT_QUAD = QuadConfig()


@dataclass(frozen=True)
class ConvergenceRow:
    j: int
    N: int
    n: int
    J: int
    value_real: float
    value_imag: float
    oracle: int

    @property
    def abs_error(self) -> float:
        return abs(self.value_real - self.oracle)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["abs_error"] = self.abs_error
        return d


def has_pole(kappa: int, r: int, N: int) -> bool:
    """True iff the cotangent has a pole inside the integration range."""
    return kappa == 0 and 6 * r * r < N


def _bessel_scale(params: CoefficientParams, k: int) -> float:
    return 4 * math.pi * math.sqrt(float(params.g)) / k


def term_integrand(x, k: int, kappa: int, r: int, params: CoefficientParams):
    """The integrand of T in the original variable x."""
    N = params.N
    x = np.asarray(x, dtype=float)
    kernel = np.sqrt(np.maximum(1.0 / 24 - N * x * x, 0.0))
    cot = 1.0 / np.tan(np.pi * (-x + kappa + r / (2 * N)) / k)
    return kernel * cot * bessel_i1(_bessel_scale(params, k) * kernel)


def _theta_integrand(k: int, kappa: int, r: int, params: CoefficientParams):
    N = params.N
    X = 1.0 / math.sqrt(24 * N)
    scale = _bessel_scale(params, k)
    shift = kappa + r / (2 * N)

    def g(theta):
        c = np.cos(theta)
        kernel = c / math.sqrt(24)
        cot = 1.0 / np.tan(np.pi * (shift - X * np.sin(theta)) / k)
        return kernel * cot * bessel_i1(scale * kernel) * X * c

    return g


def term_integral(k: int, kappa: int, r: int, params: CoefficientParams, quad: QuadConfig = DEFAULT_QUAD) -> float:
    """Principal value T(k, kappa, r) for the given coefficient."""
    params.check_rademacher()
    N = params.N
    g = _theta_integrand(k, kappa, r, params)
    half_pi = math.pi / 2
    if has_pole(kappa, r, N):
        X = 1.0 / math.sqrt(24 * N)
        theta_pole = math.asin(r / (2 * N) / X)
        return integrate_pv(g, -half_pi, half_pi, theta_pole, quad.panels, quad.order)
    return integrate_smooth(g, -half_pi, half_pi, quad.panels, quad.order)


def term_integral_plain(k: int, kappa: int, r: int, params: CoefficientParams, quad: QuadConfig = DEFAULT_QUAD) -> float:
    """T by ordinary quadrature, ignoring any pole; only meaningful when pole-free."""
    g = _theta_integrand(k, kappa, r, params)
    return integrate_smooth(g, -math.pi / 2, math.pi / 2, quad.panels, quad.order)


def k_contribution(k: int, params: CoefficientParams, quad: QuadConfig = DEFAULT_QUAD, scalar_kloosterman: bool = False) -> complex:
    """sum_{r, kappa} K / k^2 * T for one k (without the -2 pi i / sqrt(g) prefactor)."""
    j, N, n = params.j, params.N, params.n
    if scalar_kloosterman:
        K = np.array(
            [[kloosterman_sum(KloostermanKey(k, j, N, n, r, kap)) for kap in range(k)] for r in range(1, N)]
        )
    else:
        K = kloosterman_block(k, j, N, [n])[0]

    # every pole-free (r, kappa) shares the same nodes and Bessel factor
    X = 1.0 / math.sqrt(24 * N)
    theta, w = composite_nodes(-math.pi / 2, math.pi / 2, quad.panels, quad.order)
    c = np.cos(theta)
    kernel = c / math.sqrt(24)
    weight = w * kernel * bessel_i1(_bessel_scale(params, k) * kernel) * X * c
    x = X * np.sin(theta)
    rs = np.arange(1, N)[:, None, None]
    kaps = np.arange(k)[None, :, None]
    cot = 1.0 / np.tan(np.pi * (kaps + rs / (2 * N) - x[None, None, :]) / k)
    T = cot @ weight
    for r in range(1, N):
        if has_pole(0, r, N):
            T[r - 1, 0] = term_integral(k, 0, r, params, quad)
    return complex((K * T).sum()) / (k * k)


def _prefactor(params: CoefficientParams) -> complex:
    return -2j * math.pi / math.sqrt(float(params.g))


def partial_sum(params: CoefficientParams, J: int, quad: QuadConfig = DEFAULT_QUAD, workers: int = 1) -> complex:
    """S_J; per-k terms are reduced in ascending k regardless of ``workers``."""
    params.check_rademacher()
    if J < 1:
        raise ValueError("J must be at least 1")
    terms = ordered_map(partial(k_contribution, params=params, quad=quad), range(1, J + 1), workers)
    total = 0j
    for t in terms:
        total += t
    return _prefactor(params) * total


def convergence_table(params: CoefficientParams, J_list, quad: QuadConfig = DEFAULT_QUAD, workers: int = 1) -> list[ConvergenceRow]:
    """One row per J, reusing the k-terms across rows."""
    params.check_rademacher()
    J_list = list(J_list)
    if not J_list or any(b <= a for a, b in zip(J_list, J_list[1:])) or J_list[0] < 1:
        raise ValueError("J_list must be strictly ascending positive integers")
    terms = ordered_map(partial(k_contribution, params=params, quad=quad), range(1, J_list[-1] + 1), workers)
    oracle = coefficient_exact(params)
    pref = _prefactor(params)
    rows = []
    total = 0j
    k = 0
    for J in J_list:
        while k < J:
            total += terms[k]
            k += 1
        value = pref * total
        rows.append(ConvergenceRow(params.j, params.N, params.n, J, value.real, value.imag, oracle))
    return rows
