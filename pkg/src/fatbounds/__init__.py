"""Exact lower bounds on the least degree d(m, n) of a plane curve with n general points of multiplicity m."""

from .arith import ceil_rational, ceil_sqrt, isqrt, sqrt_decompose
from .averaged import compare_lambda_r, roe_r, roe_r_product, roe_upper_bound_analytic
from .bounds import (
    BoundReport,
    DrPair,
    bound_report,
    easy_bound_floor,
    easy_bound_ratio,
    general_bound,
    lambda_,
    lambda_bound,
    lambda_closed_form,
    nagata_holds,
    nagata_range_check,
    optimize_dr,
    small_n_exact,
    xu_threshold,
)
from .lattice import DivisorClass, easy_bound_certificate, effective_decomposition, intersect, nef_certificate
from .unloading import roe_R_block, roe_R_naive

__version__ = "0.1.0"
