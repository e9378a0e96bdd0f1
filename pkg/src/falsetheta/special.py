"""I_1 Bessel function, Gauss-Legendre rules and a principal-value integrator."""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import OrderOutOfRange, PoleOnBoundary, PoleOutsideInterval

BESSEL_MAX_ARG = 700.0


def bessel_i1(z):
    """Modified Bessel function I_1 by its power series.

    I_1(z) = sum_m (z/2)^{2m+1} / (m! (m+1)!). Accepts scalars or arrays;
    terms are added until each is below 1e-17 of the running sum.
    """
    arr = np.asarray(z, dtype=float)
    if np.any(arr < 0):
        raise ValueError("bessel_i1 is only provided for z >= 0")
    if np.any(arr > BESSEL_MAX_ARG):
        raise OverflowError(f"bessel_i1 argument exceeds {BESSEL_MAX_ARG}")
    half = arr / 2.0
    quarter_sq = half * half
    term = half.copy()
    total = term.copy()
    m = 0
    while True:
        m += 1
        term = term * quarter_sq / (m * (m + 1))
        total = total + term
        if np.all(term <= 1e-17 * total):
            break
    return float(total) if np.ndim(z) == 0 else total


def bessel_i1_derivative(z):
    """d/dz I_1(z) from the term-wise differentiated series."""
    arr = np.asarray(z, dtype=float)
    half = arr / 2.0
    quarter_sq = half * half
    # d/dz (z/2)^{2m+1} / (m!(m+1)!) = (2m+1)/2 (z/2)^{2m} / (m!(m+1)!)
    coeff = np.ones_like(arr)
    total = 0.5 * coeff
    m = 0
    while True:
        m += 1
        coeff = coeff * quarter_sq / (m * (m + 1))
        piece = (2 * m + 1) / 2.0 * coeff
        total = total + piece
        if np.all(piece <= 1e-17 * total):
            break
    return float(total) if np.ndim(z) == 0 else total


@lru_cache(maxsize=None)
def _rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre_rule(order: int) -> list[tuple[float, float]]:
    """(node, weight) pairs on [-1, 1]."""
    if not 2 <= order <= 128:
        raise OrderOutOfRange(f"order must be in [2, 128], got {order}")
    nodes, weights = _rule(order)
    return list(zip(nodes.tolist(), weights.tolist()))


def composite_nodes(a: float, b: float, panels: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the composite rule on [a, b]; endpoints are never nodes."""
    if panels < 1:
        raise ValueError("panels must be positive")
    gauss_legendre_rule(order)
    t, w = _rule(order)
    edges = np.linspace(a, b, panels + 1)
    lo, hi = edges[:-1, None], edges[1:, None]
    half = (hi - lo) / 2.0
    x = (lo + hi) / 2.0 + half * t[None, :]
    return x.ravel(), (half * w[None, :]).ravel()


def integrate_smooth(f, a: float, b: float, panels: int = 8, order: int = 32) -> float:
    """Composite Gauss-Legendre integral of f over [a, b]; f must accept arrays."""
    x, w = composite_nodes(a, b, panels, order)
    return float(np.dot(w, f(x)))


def integrate_pv(f, a: float, b: float, pole: float, panels: int = 8, order: int = 32) -> float:
    """Cauchy principal value of the integral of f over [a, b] across a simple pole.

    Uses pole pairing: integral over [0, m] of f(pole + u) + f(pole - u),
    m = min(pole - a, b - pole), plus the ordinary integral over whatever is
    left on the longer side. Gauss nodes never touch u = 0.
    """
    if not a < b:
        raise ValueError("need a < b")
    if pole < a or pole > b:
        raise PoleOutsideInterval(f"pole {pole} not in [{a}, {b}]")
    if pole == a or pole == b:
        raise PoleOnBoundary(f"pole {pole} sits on the integration boundary")
    left, right = pole - a, b - pole
    m = min(left, right)
    paired = integrate_smooth(lambda u: f(pole + u) + f(pole - u), 0.0, m, panels, order)
    if left > right:
        rest = integrate_smooth(f, a, pole - m, panels, order)
    elif right > left:
        rest = integrate_smooth(f, pole + m, b, panels, order)
    else:
        rest = 0.0
    return paired + rest
