"""Derivatives of the Bessel function J_nu(z) with respect to the order nu.

Evaluates J_nu(z) and d^k J_nu(z) / d nu^k for real nu and k >= 1 through
closed-form series built on a reciprocal-gamma Taylor table, exact Stirling
and modified-harmonic combinatorics and reciprocal-Pochhammer derivative
recurrences, with independent finite-difference and recurrence oracles.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .combinatorics import (
    HarmonicTable,
    StirlingTable,
    mod_harmonic,
    mod_harmonic_explicit,
    stirling_first,
)
from .errors import AccuracyWarning, ConvergenceError, OracleError, PoleError
from .gamma_recip import (
    GammaCoeffs,
    default_gamma_table,
    gamma_coeffs,
    recip_gamma_deriv,
    recip_gamma_deriv_info,
)
from .oracle import (
    FdConfig,
    oracle_finite_difference,
    oracle_finite_difference_info,
    oracle_recurrence,
)
from .order_derivative import (
    Branch,
    DerivativeResult,
    OrderSplit,
    SeriesConfig,
    bessel_j,
    dnu_bessel_j,
    dnu_bessel_j_first,
    dnu_bessel_j_integer,
    split_order,
)
from .pochhammer import (
    poch_deriv,
    poch_deriv_at_one,
    poch_deriv_explicit,
    pochhammer,
    recip_poch_deriv,
    recip_poch_deriv_explicit,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyWarning",
    "Branch",
    "ConvergenceError",
    "DerivativeResult",
    "FdConfig",
    "GammaCoeffs",
    "HarmonicTable",
    "KERNEL_BACKEND",
    "OracleError",
    "OrderSplit",
    "PoleError",
    "SeriesConfig",
    "StirlingTable",
    "bessel_j",
    "default_gamma_table",
    "dnu_bessel_j",
    "dnu_bessel_j_first",
    "dnu_bessel_j_integer",
    "gamma_coeffs",
    "mod_harmonic",
    "mod_harmonic_explicit",
    "oracle_finite_difference",
    "oracle_finite_difference_info",
    "oracle_recurrence",
    "poch_deriv",
    "poch_deriv_at_one",
    "poch_deriv_explicit",
    "pochhammer",
    "recip_gamma_deriv",
    "recip_gamma_deriv_info",
    "recip_poch_deriv",
    "recip_poch_deriv_explicit",
    "split_order",
    "stirling_first",
]
