"""Independent verification paths for the order-derivative engine.

Two oracles: Richardson-extrapolated central differences of bessel_j in nu,
and the textbook derivative recurrence that builds d^k from d^(k-1) with
reciprocal-gamma derivatives at the shifted arguments nu + 1 + m.  The shifted
derivatives are never taken from the Taylor series directly (it converges
poorly away from 1); they are reassembled from values at 1 + eps through
1/Gamma(t + M) = Q-column(t) / Gamma(t) for M >= 0 and the Pochhammer-product
analogue for M < 0.
"""

import math
from dataclasses import dataclass

from .errors import ConvergenceError, OracleError
from .gamma_recip import default_gamma_table, recip_gamma_deriv
from .order_derivative import SeriesConfig, bessel_j, split_order
from .pochhammer import poch_deriv_table

__all__ = [
    "FdConfig",
    "CENTRAL_STENCILS",
    "richardson_central_derivative",
    "oracle_finite_difference",
    "oracle_finite_difference_info",
    "oracle_recurrence",
]

# Minimal second-order central stencils, k = 1..6: (offsets, coefficients).
CENTRAL_STENCILS = {
    1: ((-1, 1), (-0.5, 0.5)),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0)),
    3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5)),
    4: ((-2, -1, 0, 1, 2), (1.0, -4.0, 6.0, -4.0, 1.0)),
    5: ((-3, -2, -1, 1, 2, 3), (-0.5, 2.0, -2.5, 2.5, -2.0, 0.5)),
    6: ((-3, -2, -1, 0, 1, 2, 3), (1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0)),
}


@dataclass(frozen=True)
class FdConfig:
    """Step schedule for the finite-difference oracle: steps h, h/2, h/4, ..."""

    base_step: float = 1e-2
    levels: int = 4

    def __post_init__(self):
        if not self.base_step > 0:
            raise ValueError("base_step must be positive")
        if self.levels < 1:
            raise ValueError("levels must be >= 1")


def richardson_central_derivative(f, x: float, k: int, base_step: float, levels: int):
    """k-th derivative of f at x: central stencil at steps h/2^i, polynomial
    extrapolation in h^2.  Returns (value, error_estimate); the estimate is the
    difference between the last two extrapolation levels (inf for one level)."""
    if k not in CENTRAL_STENCILS:
        raise ValueError(f"no central stencil for k={k} (supported: 1..6)")
    offsets, coeffs = CENTRAL_STENCILS[k]
    diag = []
    prev_row: list = []
    for i in range(levels):
        h = base_step / 2**i
        d = math.fsum(c * f(x + o * h) for o, c in zip(offsets, coeffs)) / h**k
        row = [d]
        for j in range(1, i + 1):
            fac = 4.0**j
            row.append((fac * row[j - 1] - prev_row[j - 1]) / (fac - 1.0))
        prev_row = row
        diag.append(row[-1])
    err = abs(diag[-1] - diag[-2]) if levels >= 2 else math.inf
    return diag[-1], err


def oracle_finite_difference_info(
    nu: float,
    z: float,
    k: int,
    fd: FdConfig | None = None,
    cfg: SeriesConfig | None = None,
) -> tuple[float, float]:
    """As oracle_finite_difference, but also return the error estimate."""
    if not 1 <= k <= 4:
        raise ValueError("finite-difference oracle supports 1 <= k <= 4")
    fd = fd or FdConfig()
    cfg = cfg or SeriesConfig()
    h_min = fd.base_step / 2 ** (fd.levels - 1)
    if nu + h_min == nu or nu - h_min == nu:
        raise OracleError(f"step underflow: base_step={fd.base_step} at nu={nu}")
    value, err = richardson_central_derivative(
        lambda v: bessel_j(v, z, cfg), nu, k, fd.base_step, fd.levels
    )
    # For results beyond unit scale the 1e-4 cutoff applies in units of the
    # result; otherwise a large-magnitude derivative would be rejected while
    # carrying ten good digits.
    if err > 1e-4 * max(1.0, abs(value)):
        raise OracleError(
            f"finite-difference estimate unusable (error estimate {err:.3e} > 1e-4)"
        )
    return value, err


def oracle_finite_difference(
    nu: float,
    z: float,
    k: int,
    fd: FdConfig | None = None,
    cfg: SeriesConfig | None = None,
) -> float:
    """Richardson-extrapolated central-difference estimate of d^k J_nu / d nu^k."""
    return oracle_finite_difference_info(nu, z, k, fd, cfg)[0]


def _shifted_recip_gamma_derivs(m_shift: int, t: float, g, k: int, rows_cache) -> list:
    """[G^(l)(t + m_shift) for l = 0..k] recombined from derivatives at t.

    For m_shift >= 0 the caller supplies the Q-column at t (advanced
    incrementally); for m_shift < 0 the finite Pochhammer table at t + m_shift
    is built on the spot (at most |m_shift| <= |N| rows).
    """
    out = []
    if m_shift >= 0:
        q = rows_cache  # Q_{m_shift}^{(0..k)}(t)
        for l in range(k + 1):
            out.append(
                math.fsum(
                    math.comb(l, j) * g[j] * math.factorial(l - j) * q[l - j]
                    for j in range(l + 1)
                )
            )
    else:
        p = -m_shift
        prows = poch_deriv_table(p, k, t + m_shift)
        for l in range(k + 1):
            out.append(
                math.fsum(
                    math.comb(l, j) * math.factorial(j) * prows[p][j] * g[l - j]
                    for j in range(l + 1)
                )
            )
    return out


def _recurrence_step_series(split, z: float, kk: int, g, cfg: SeriesConfig) -> float:
    """The m-series of the derivative recurrence at level kk:
    sum_m (-x)^m/m! * sum_{l=1..kk} C(kk-1, l-1) G^(l)(nu+1+m) ln(z/2)^(kk-l)."""
    x = z * z / 4.0
    t = 1.0 + split.eps
    lg = math.log(z / 2.0)
    lgpow = [1.0]
    for _ in range(kk):
        lgpow.append(lgpow[-1] * lg)
    binom = [0] + [math.comb(kk - 1, l - 1) for l in range(1, kk + 1)]

    q = [0.0] * (kk + 1)
    q[0] = 1.0
    m_shift = split.n  # current M = N + m
    burn = 0
    while burn < m_shift:  # advance Q to M = N when N > 0
        inv = 1.0 / (t + burn)
        q[0] *= inv
        for j in range(1, kk + 1):
            q[j] = (q[j] - q[j - 1]) * inv
        burn += 1

    s = 0.0
    comp = 0.0
    coef = 1.0
    small = 0
    m_shift = split.n
    for m in range(cfg.max_terms):
        gs = _shifted_recip_gamma_derivs(m_shift, t, g, kk, q)
        inner = math.fsum(binom[l] * gs[l] * lgpow[kk - l] for l in range(1, kk + 1))
        term = coef * inner
        tmp = s + term
        if abs(s) >= abs(term):
            comp += (s - tmp) + term
        else:
            comp += (term - tmp) + s
        s = tmp
        if abs(term) < cfg.tol * max(abs(s + comp), 1e-300):
            small += 1
            if small >= 2:
                return s + comp
        else:
            small = 0
        if m_shift >= 0:
            inv = 1.0 / (t + m_shift)
            q[0] *= inv
            for j in range(1, kk + 1):
                q[j] = (q[j] - q[j - 1]) * inv
        m_shift += 1
        coef *= -x / (m + 1)
    raise ConvergenceError(
        f"recurrence-oracle series not converged within {cfg.max_terms} terms "
        f"(nu={split.nu}, z={z}, k={kk})"
    )


def oracle_recurrence(nu: float, z: float, k: int, cfg: SeriesConfig | None = None) -> float:
    """d^k J_nu / d nu^k by iterating the derivative recurrence up from J_nu."""
    if k < 1:
        raise ValueError("recurrence oracle requires k >= 1")
    if not (math.isfinite(z) and z > 0):
        raise ValueError(f"argument z must be finite and > 0, got {z}")
    cfg = cfg or SeriesConfig()
    split = split_order(nu)
    table = default_gamma_table()
    g = [recip_gamma_deriv(j, split.eps, table) for j in range(k + 1)]
    lg = math.log(z / 2.0)
    scale = (z / 2.0) ** nu
    val = bessel_j(nu, z, cfg)
    for kk in range(1, k + 1):
        val = lg * val + scale * _recurrence_step_series(split, z, kk, g, cfg)
    return val
