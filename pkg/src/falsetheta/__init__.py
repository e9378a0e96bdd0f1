"""Fourier coefficients of the mixed false modular forms F_{j,N}/eta:
exact q-series values and the truncated Rademacher-type formula."""
from .rademacher import ConvergenceRow, QuadConfig, convergence_table, partial_sum, term_integral
from .series import CoefficientParams, coefficient_exact, coefficient_table

__all__ = [
    "CoefficientParams",
    "ConvergenceRow",
    "QuadConfig",
    "coefficient_exact",
    "coefficient_table",
    "convergence_table",
    "partial_sum",
    "term_integral",
]
