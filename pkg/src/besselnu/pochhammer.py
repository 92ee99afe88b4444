"""Scaled derivatives of the Pochhammer symbol and of its reciprocal.

P_m^(k)(t) = d^k/dt^k (t)_m / k!  and  Q_m^(k)(t) = d^k/dt^k [1/(t)_m] / k!.

Production route is the pair of recurrences

    P_{m+1}^(k) = (t+m) P_m^(k) + P_m^(k-1)
    Q_{m+1}^(k) = (Q_m^(k) - Q_{m+1}^(k-1)) / (t+m)

which are cancellation-free for t >= 1/2 (the only range the series engine
uses).  The explicit closed forms are kept as *_explicit twins: they lose
roughly m bits to alternating cancellation as m grows and serve as test
oracles only.
"""

import math

from .combinatorics import stirling_first
from .errors import PoleError

__all__ = [
    "pochhammer",
    "poch_deriv",
    "poch_deriv_table",
    "poch_deriv_at_one",
    "poch_deriv_explicit",
    "recip_poch_deriv",
    "recip_poch_deriv_explicit",
]


def _validate(m: int, k: int) -> None:
    if m < 0 or k < 0:
        raise ValueError(f"orders must be non-negative, got m={m}, k={k}")


def pochhammer(t: float, m: int) -> float:
    """Rising factorial (t)_m = t (t+1) ... (t+m-1); (t)_0 = 1."""
    if m < 0:
        raise ValueError("m must be >= 0")
    out = 1.0
    for i in range(m):
        out *= t + i
    return out


def poch_deriv(m: int, k: int, t: float) -> float:
    """P_m^(k)(t) by the recurrence; exactly 0 for k > m."""
    _validate(m, k)
    if k > m:
        return 0.0
    p = [0.0] * (k + 1)
    p[0] = 1.0
    for mm in range(m):
        for j in range(k, 0, -1):
            p[j] = (t + mm) * p[j] + p[j - 1]
        p[0] *= t + mm
    return p[k]


def poch_deriv_table(m_max: int, k_max: int, t: float) -> list:
    """Rows [P_m^(0..k_max)(t)] for m = 0..m_max, one recurrence sweep."""
    _validate(m_max, k_max)
    p = [0.0] * (k_max + 1)
    p[0] = 1.0
    rows = [p[:]]
    for mm in range(m_max):
        for j in range(k_max, 0, -1):
            p[j] = (t + mm) * p[j] + p[j - 1]
        p[0] *= t + mm
        rows.append(p[:])
    return rows


def poch_deriv_at_one(m: int, k: int) -> float:
    """P_m^(k)(1) = (-1)^(m-k) s(m+1, k+1), straight from the Stirling table."""
    _validate(m, k)
    if k > m:
        return 0.0
    sign = -1.0 if (m - k) & 1 else 1.0
    return sign * stirling_first(m + 1, k + 1)


def poch_deriv_explicit(m: int, k: int, t: float) -> float:
    """P_m^(k)(t) by the explicit Stirling-number sum (test oracle route)."""
    _validate(m, k)
    if k > m:
        return 0.0
    total = 0.0
    for l in range(m - k + 1):
        term = math.comb(m, l) * stirling_first(m - l, k) * pochhammer(t, l)
        total += -term if l & 1 else term
    return -total if (m - k) & 1 else total


def _check_poles(m: int, t: float) -> None:
    # 1/(t)_m has poles at t = 0, -1, ..., -(m-1).
    if t <= 0 and t == math.floor(t) and -t < m:
        raise PoleError(f"1/(t)_m has a pole at t={t} for m={m}")


def recip_poch_deriv(m: int, k: int, t: float) -> float:
    """Q_m^(k)(t) by the recurrence; Q_0^(k) = delta_{k,0}."""
    _validate(m, k)
    if m == 0:
        return 1.0 if k == 0 else 0.0
    _check_poles(m, t)
    q = [0.0] * (k + 1)
    q[0] = 1.0
    for mm in range(m):
        inv = 1.0 / (t + mm)
        q[0] *= inv
        for j in range(1, k + 1):
            q[j] = (q[j] - q[j - 1]) * inv
    return q[k]


def recip_poch_deriv_explicit(m: int, k: int, t: float) -> float:
    """Q_m^(k)(t) by the explicit partial-fraction sum (test oracle route)."""
    _validate(m, k)
    if m == 0:
        return 1.0 if k == 0 else 0.0
    _check_poles(m, t)
    total = 0.0
    for l in range(m):
        term = 1.0 / (math.factorial(l) * math.factorial(m - 1 - l) * (t + l) ** (k + 1))
        total += -term if l & 1 else term
    return -total if k & 1 else total
