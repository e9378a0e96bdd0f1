"""Kloosterman sums K_{k,j,N}(n, r, kappa) and an empirical growth scan.

    K = sum_{0 <= h < k, (h,k)=1} chi_{j,r}(N, M_{h,k})
            * zeta_{24k}^{(24N(kappa + r/2N)^2 - 1) h' - 24 (n + j^2/4N - 1/24) h}

Multiplying the exponent by N makes every numerator an integer over the
common denominator 24kN:

    A(kappa, r) = 24 N^2 kappa^2 + 24 N kappa r + 6 r^2 - N
    B(n)        = 24 n N + 6 j^2 - N
    phase       = e((A h' - B h) / 24kN)

The phase splits into an h'-part and an h-part, so a whole (kappa, n) block is
one matrix product per r.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import partial

import numpy as np

from ._parallel import ordered_map
from .arith import neg_mod_inverse, root_of_unity
from .errors import IndexOutOfRange
from .multipliers import chi_multiplier, chi_row, chi_via_gauss_odd, matrix_hk


@dataclass(frozen=True)
class KloostermanKey:
    k: int
    j: int
    N: int
    n: int
    r: int
    kappa: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.N < 2:
            raise ValueError(f"N must be at least 2, got {self.N}")
        if not (1 <= self.j <= self.N - 1 and 1 <= self.r <= self.N - 1):
            raise IndexOutOfRange(f"j={self.j}, r={self.r} must lie in [1, {self.N - 1}]")
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")

    @property
    def kappa_reduced(self) -> int:
        return self.kappa % self.k


def _units(k: int) -> tuple[np.ndarray, np.ndarray]:
    hs = [h for h in range(k) if math.gcd(h, k) == 1]
    hps = [neg_mod_inverse(h, k) for h in hs]
    return np.array(hs, dtype=np.int64), np.array(hps, dtype=np.int64)


def chi_table(k: int, j: int, N: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(h, h', chi) with chi[r-1, i] = chi_{j,r}(N, M_{h_i,k})."""
    hs, hps = _units(k)
    chis = np.stack([chi_row(j, N, int(h), k) for h in hs], axis=1)
    return hs, hps, chis


def _a_numerators(N: int, r: int, kappas: np.ndarray, den: int) -> np.ndarray:
    kap = kappas % den
    return (24 * N * N * (kap * kap % den) + 24 * N * r * kap + 6 * r * r - N) % den


def kloosterman_sum(key: KloostermanKey, multiplier=None) -> complex:
    """Direct summation over h. ``multiplier(h, k, j, r, N)`` overrides chi."""
    k, j, N, n, r, kappa = key.k, key.j, key.N, key.n, key.r, key.kappa
    den = 24 * k * N
    a_num = 24 * N * N * kappa * kappa + 24 * N * kappa * r + 6 * r * r - N
    b_num = 24 * n * N + 6 * j * j - N
    total = 0j
    for h in range(k):
        if math.gcd(h, k) != 1:
            continue
        hp = neg_mod_inverse(h, k)
        if multiplier is None:
            chi = chi_multiplier(j, r, N, matrix_hk(h, k))
        else:
            chi = multiplier(h, k, j, r, N)
        total += chi * root_of_unity(a_num * hp - b_num * h, den)
    return total


def kloosterman_sum_gauss(key: KloostermanKey) -> complex:
    """Same sum with chi taken from the Gauss-sum rewriting (odd k only)."""
    return kloosterman_sum(key, multiplier=chi_via_gauss_odd)


def kloosterman_block(k: int, j: int, N: int, ns, table=None, kappa_offset: int = 0) -> np.ndarray:
    """K[n_index, r-1, i] for all r in [1, N-1] and kappa = kappa_offset + i, i < k.

    chi and h' are computed once per h and shared by every (n, r, kappa).
    """
    hs, hps, chis = table if table is not None else chi_table(k, j, N)
    ns = np.atleast_1d(np.asarray(ns, dtype=np.int64))
    den = 24 * k * N
    kappas = np.arange(kappa_offset, kappa_offset + k, dtype=np.int64)
    b_num = (24 * N * (ns % den) + 6 * j * j - N) % den
    # e(-B h / den) for every (n, h)
    h_phase = np.exp(-2j * np.pi * ((b_num[:, None] * hs[None, :]) % den) / den)
    out = np.empty((len(ns), N - 1, k), dtype=complex)
    for r in range(1, N):
        a_num = _a_numerators(N, r, kappas, den)
        hp_phase = np.exp(2j * np.pi * ((a_num[:, None] * hps[None, :]) % den) / den)
        weighted = h_phase * chis[r - 1][None, :]
        out[:, r - 1, :] = weighted @ hp_phase.T
    return out


def kloosterman_row(k: int, j: int, N: int, n: int, r: int) -> np.ndarray:
    """K_{k,j,N}(n, r, kappa) for kappa = 0..k-1."""
    KloostermanKey(k, j, N, n, r)
    return kloosterman_block(k, j, N, [n])[0, r - 1]


@dataclass
class ScanReport:
    j: int
    N: int
    eps: float
    max_ratio: float = 0.0
    argmax: dict = field(default_factory=dict)
    per_k: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "j": self.j,
            "N": self.N,
            "eps": self.eps,
            "max_ratio": self.max_ratio,
            "argmax": self.argmax,
            "per_k": self.per_k,
        }


def _scan_one_k(k: int, j: int, N: int, ns: tuple[int, ...], eps: float) -> dict:
    block = np.abs(kloosterman_block(k, j, N, ns))
    scaled = block / np.asarray(ns, dtype=float)[:, None, None]
    idx = np.unravel_index(int(np.argmax(scaled)), scaled.shape)
    best = float(scaled[idx])
    return {
        "k": k,
        "max_abs_over_n": best,
        "max_ratio": best / k ** (0.5 + eps),
        "n": int(ns[idx[0]]),
        "r": int(idx[1]) + 1,
        "kappa": int(idx[2]),
    }


def bound_ratio_scan(j: int, N: int, n_set, k_max: int, eps: float, workers: int = 1) -> ScanReport:
    """Scan |K| / (n k^{1/2+eps}) over n in n_set, k <= k_max, all r and kappa.

    Only per-k maxima are kept. The implied constant is reported as observed;
    nothing here asserts a value for it.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if eps <= 0:
        raise ValueError("eps must be positive")
    ns = tuple(int(n) for n in n_set)
    if not ns or min(ns) < 1:
        raise ValueError("n_set must contain positive integers")
    if not 1 <= j <= N - 1:
        raise IndexOutOfRange(f"j={j} must lie in [1, {N - 1}]")
    rows = ordered_map(partial(_scan_one_k, j=j, N=N, ns=ns, eps=eps), range(1, k_max + 1), workers)
    report = ScanReport(j=j, N=N, eps=eps, per_k=rows)
    for row in rows:
        if row["max_ratio"] > report.max_ratio or not report.argmax:
            report.max_ratio = row["max_ratio"]
            report.argmax = {key: row[key] for key in ("k", "n", "r", "kappa")}
    return report


def growth_exponent(per_k: list[dict], key: str = "max_abs_over_n") -> float:
    """Least-squares slope of log(per-k maximum) against log k."""
    ks = np.array([row["k"] for row in per_k], dtype=float)
    vals = np.array([row[key] for row in per_k], dtype=float)
    mask = vals > 0
    slope, _ = np.polyfit(np.log(ks[mask]), np.log(vals[mask]), 1)
    return float(slope)
