"""Core engine: J_nu(z) and its derivatives with respect to the order nu.

The order is split as nu = N + eps with N the nearest integer and
|eps| <= 1/2.  The ascending series is then factored so that every
gamma-function evaluation happens at 1 + eps, where the reciprocal-gamma
Taylor series converges fast, and the per-term coefficients reduce to
reciprocal-Pochhammer derivative columns (plus a finite Pochhammer-derivative
head when N < 0).  Exact-integer orders dispatch to specializations built on
Stirling and modified harmonic numbers.
"""

import math
import warnings
from array import array
from dataclasses import dataclass
from enum import Enum

from . import _kernels
from .combinatorics import stirling_first
from .errors import AccuracyWarning, ConvergenceError
from .gamma_recip import default_gamma_table, digamma_near_one, recip_gamma_deriv
from .pochhammer import poch_deriv_table

__all__ = [
    "Branch",
    "OrderSplit",
    "SeriesConfig",
    "DerivativeResult",
    "split_order",
    "bessel_j",
    "dnu_bessel_j",
    "dnu_bessel_j_integer",
    "dnu_bessel_j_first",
]

# Supported accuracy envelope in double precision; outside it the alternating
# series loses digits to cancellation and results carry a warning, not an error.
MAX_Z = 10.0
MAX_ABS_NU = 10.0
MAX_K = 6


class Branch(Enum):
    NONNEG_N = "NonNegN"
    NEG_N = "NegN"
    INTEGER_NONNEG = "IntegerNonNeg"
    INTEGER_NEG = "IntegerNeg"


@dataclass(frozen=True)
class OrderSplit:
    """Decomposition nu = N + eps, |eps| <= 1/2, N integer."""

    nu: float
    n: int
    eps: float

    def __post_init__(self):
        if not math.isfinite(self.nu):
            raise ValueError("order nu must be finite")
        if not abs(self.eps) <= 0.5:
            raise ValueError("|eps| must be <= 1/2")
        if self.n + self.eps != self.nu:
            raise ValueError("split does not reproduce nu exactly")


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation control for the outer m-series."""

    tol: float = 1e-13
    max_terms: int = 300

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 10:
            raise ValueError("max_terms must be >= 10")


@dataclass(frozen=True)
class DerivativeResult:
    """Value of d^k J_nu / d nu^k plus evaluation diagnostics."""

    value: float
    terms_used: int
    branch: Branch
    tail_estimate: float


def split_order(nu: float) -> OrderSplit:
    """Nearest-integer split; half-integers resolve to eps = -1/2."""
    if not math.isfinite(nu):
        raise ValueError("order nu must be finite")
    n = math.floor(nu + 0.5)
    return OrderSplit(nu, n, nu - n)


def _check_envelope(nu: float, z: float, k: int) -> None:
    if z > MAX_Z or abs(nu) > MAX_ABS_NU or k > MAX_K:
        warnings.warn(
            f"(nu={nu}, z={z}, k={k}) is outside the supported accuracy envelope "
            f"(z <= {MAX_Z}, |nu| <= {MAX_ABS_NU}, k <= {MAX_K}); "
            "expect reduced accuracy",
            AccuracyWarning,
            stacklevel=3,
        )


def _validate_z(z: float) -> None:
    if not (math.isfinite(z) and z > 0):
        raise ValueError(f"argument z must be finite and > 0, got {z}")


def _log_powers(lg: float, k: int) -> list:
    """[ln(z/2)]^i / i! for i = 0..k."""
    out = [1.0]
    for i in range(1, k + 1):
        out.append(out[-1] * lg / i)
    return out


def _weights_general(k: int, eps: float, lg: float, table) -> list:
    """w[kappa] = sum_{i+j=k-kappa} ln^i/i! * G^(j)(1+eps)/j!."""
    g_scaled = [recip_gamma_deriv(j, eps, table) / math.factorial(j) for j in range(k + 1)]
    lp = _log_powers(lg, k)
    return [
        math.fsum(lp[i] * g_scaled[kk - i] for i in range(kk + 1))
        for kk in range(k, -1, -1)
    ]


def _weights_integer(k: int, lg: float, table) -> list:
    """u[kappa] = sum_{i+j=k-kappa} ln^i/i! * c_{j+1} (the eps = 0 weights)."""
    lp = _log_powers(lg, k)
    return [
        math.fsum(lp[i] * table.c(kk - i + 1) for i in range(kk + 1))
        for kk in range(k, -1, -1)
    ]


def _general_prefix(n: int, k: int, eps: float, x: float, w: list) -> tuple[float, int]:
    """Finite head of the N < 0 series: m = 0..-N-1 carries Pochhammer derivatives
    of (-eps)_{-N-m}; the (-1)^(p+kappa) factor comes from d/d nu acting on (-eps)."""
    p_max = -n
    rows = poch_deriv_table(p_max, k, -eps)
    parts = []
    coef = 1.0
    for m in range(p_max):
        p = p_max - m
        inner = math.fsum(
            (w[kk] * rows[p][kk] if (p + kk) % 2 == 0 else -w[kk] * rows[p][kk])
            for kk in range(k + 1)
        )
        parts.append(coef * inner)
        coef *= -x / (m + 1)
    return math.fsum(parts), p_max


def _integer_prefix(n: int, k: int, x: float, u: list) -> tuple[float, int]:
    """Finite head of the negative-integer series: Stirling-number weights."""
    n_abs = -n
    parts = []
    coef = 1.0
    for m in range(n_abs):
        inner = math.fsum(u[kk] * stirling_first(n_abs - m, kk) for kk in range(k + 1))
        parts.append(coef * inner)
        coef *= -x / (m + 1)
    return math.fsum(parts), n_abs


def _package(split, z, k, cfg, total, terms, last, converged, prefix_terms, branch):
    if not converged:
        raise ConvergenceError(
            f"order-derivative series not converged within {cfg.max_terms} terms "
            f"(nu={split.nu}, z={z}, k={k})"
        )
    scale = math.factorial(k) * (z / 2.0) ** split.nu
    value = scale * total
    tail = last / max(abs(total), 1e-300)
    return DerivativeResult(value, terms + prefix_terms, branch, tail)


def _check_order_scale(n: int) -> None:
    # the Q/harmonic burn-in walks |N| recurrence steps; refuse absurd orders
    # outright instead of looping for hours
    if abs(n) > 1_000_000:
        raise ValueError(f"|nu| ~ {n} is too large to evaluate")


def _eval_general(split: OrderSplit, z: float, k: int, cfg: SeriesConfig) -> DerivativeResult:
    """Master series for arbitrary eps (valid at eps = 0 too, used by seam tests)."""
    _check_order_scale(split.n)
    x = z * z / 4.0
    t = 1.0 + split.eps
    table = default_gamma_table()
    w = _weights_general(k, split.eps, math.log(z / 2.0), table)
    prefix, prefix_terms = (0.0, 0) if split.n >= 0 else _general_prefix(
        split.n, k, split.eps, x, w
    )
    total, terms, last, converged = _kernels.q_weighted_series(
        x, t, split.n, array("d", w), prefix, cfg.tol, cfg.max_terms - prefix_terms
    )
    branch = Branch.NONNEG_N if split.n >= 0 else Branch.NEG_N
    return _package(split, z, k, cfg, total, terms, last, converged, prefix_terms, branch)


def _eval_integer(n: int, z: float, k: int, cfg: SeriesConfig) -> DerivativeResult:
    """Integer-order specialization: harmonic-number form for n >= 0, the
    Stirling head plus harmonic tail for n < 0."""
    _check_order_scale(n)
    x = z * z / 4.0
    table = default_gamma_table()
    u = _weights_integer(k, math.log(z / 2.0), table)
    v = [-u[kk] if kk % 2 else u[kk] for kk in range(k + 1)]
    prefix, prefix_terms = (0.0, 0) if n >= 0 else _integer_prefix(n, k, x, u)
    total, terms, last, converged = _kernels.harmonic_weighted_series(
        x, n, array("d", v), prefix, cfg.tol, cfg.max_terms - prefix_terms
    )
    split = OrderSplit(float(n), n, 0.0)
    branch = Branch.INTEGER_NONNEG if n >= 0 else Branch.INTEGER_NEG
    return _package(split, z, k, cfg, total, terms, last, converged, prefix_terms, branch)


def bessel_j(nu: float, z: float, cfg: SeriesConfig | None = None) -> float:
    """J_nu(z) from the factored ascending series (the k = 0 instance of the
    derivative engine, so the same code path feeds it)."""
    _validate_z(z)
    cfg = cfg or SeriesConfig()
    _check_envelope(nu, z, 0)
    return _eval_general(split_order(nu), z, 0, cfg).value


def dnu_bessel_j(nu: float, z: float, k: int, cfg: SeriesConfig | None = None) -> DerivativeResult:
    """d^k J_nu(z) / d nu^k.  k = 0 is accepted as a convenience and returns
    J_nu(z) itself (with diagnostics); exact-integer nu dispatches to the
    integer specialization."""
    _validate_z(z)
    if k < 0:
        raise ValueError("derivative order k must be >= 0")
    cfg = cfg or SeriesConfig()
    _check_envelope(nu, z, k)
    split = split_order(nu)
    if split.eps == 0.0:
        return _eval_integer(split.n, z, k, cfg)
    return _eval_general(split, z, k, cfg)


def dnu_bessel_j_integer(n: int, z: float, k: int, cfg: SeriesConfig | None = None) -> DerivativeResult:
    """Integer-order form of dnu_bessel_j (harmonic/Stirling specialization)."""
    if not isinstance(n, int):
        raise TypeError("n must be an integer")
    _validate_z(z)
    if k < 0:
        raise ValueError("derivative order k must be >= 0")
    cfg = cfg or SeriesConfig()
    _check_envelope(n, z, k)
    return _eval_integer(n, z, k, cfg)


def _stirling_eps_poly(p: int, eps: float) -> float:
    """sum_{j=0}^{p-1} (j+1) s(p, j+1) eps^j: the first-derivative weight of the
    finite head, i.e. the Stirling expansion of the generalized-Bernoulli factor."""
    parts = []
    epow = 1.0
    for j in range(p):
        parts.append((j + 1) * stirling_first(p, j + 1) * epow)
        epow *= eps
    return math.fsum(parts)


def _first_deriv_tail(x: float, n: int, t: float, cfg: SeriesConfig, budget: int, nu, z):
    w = array("d", (0.0, 1.0))
    total, _, _, converged = _kernels.q_weighted_series(x, t, n, w, 0.0, cfg.tol, budget)
    if not converged:
        raise ConvergenceError(
            f"first-derivative series not converged within {cfg.max_terms} terms "
            f"(nu={nu}, z={z})"
        )
    return total


def dnu_bessel_j_first(nu: float, z: float, cfg: SeriesConfig | None = None) -> float:
    """First derivative d J_nu(z) / d nu by the dedicated k = 1 closed forms
    (digamma form for non-integer nu, Euler-constant form at integers)."""
    _validate_z(z)
    cfg = cfg or SeriesConfig()
    _check_envelope(nu, z, 1)
    split = split_order(nu)
    x = z * z / 4.0
    lg = math.log(z / 2.0)
    table = default_gamma_table()
    j_val = _eval_general(split, z, 0, cfg).value

    if split.eps == 0.0:
        n = split.n
        gamma_const = table.c(2)
        h1 = array("d", (0.0, 1.0))
        if n >= 0:
            tail, _, _, converged = _kernels.harmonic_weighted_series(
                x, n, h1, 0.0, cfg.tol, cfg.max_terms
            )
            if not converged:
                raise ConvergenceError(f"series not converged (nu={nu}, z={z}, k=1)")
            return (lg + gamma_const) * j_val - (z / 2.0) ** n * tail
        n_abs = -n
        head = math.fsum(
            x**m / math.factorial(m) * math.factorial(n_abs - m - 1) for m in range(n_abs)
        )
        if n_abs % 2:
            head = -head
        tail, _, _, converged = _kernels.harmonic_weighted_series(
            x, n, h1, 0.0, cfg.tol, cfg.max_terms - n_abs
        )
        if not converged:
            raise ConvergenceError(f"series not converged (nu={nu}, z={z}, k=1)")
        return (lg + gamma_const) * j_val - (z / 2.0) ** n * (head + tail)

    t = 1.0 + split.eps
    psi = digamma_near_one(split.eps, table)
    g0 = recip_gamma_deriv(0, split.eps, table)
    if split.n >= 0:
        tail = _first_deriv_tail(x, split.n, t, cfg, cfg.max_terms, nu, z)
        return (lg - psi) * j_val + (z / 2.0) ** nu * g0 * tail
    p_max = -split.n
    parts = []
    coef = 1.0
    for m in range(p_max):
        parts.append(coef * _stirling_eps_poly(p_max - m, split.eps))
        coef *= -x / (m + 1)
    head = math.fsum(parts)
    tail = _first_deriv_tail(x, split.n, t, cfg, cfg.max_terms - p_max, nu, z)
    return (lg - psi) * j_val + (z / 2.0) ** nu * g0 * (head + tail)
