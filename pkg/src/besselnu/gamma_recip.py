"""Taylor coefficients of 1/Gamma and derivatives of the reciprocal gamma function near 1.

The reciprocal gamma function is entire, with 1/Gamma(t) = sum_{j>=1} c_j t^j.
This module generates the c_j once (in fixed-point extended precision, so the
table is reproducible to well below double roundoff) and evaluates

    G^(k)(1 + eps) = sum_{j>=0} c_{j+k+1} (j+1)_k eps^j,

which converges fast for |eps| <= 1/2, the only argument range the rest of the
package ever requests.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConvergenceError

__all__ = [
    "GammaCoeffs",
    "gamma_coeffs",
    "default_gamma_table",
    "recip_gamma_deriv",
    "recip_gamma_deriv_info",
    "digamma_near_one",
    "DEFAULT_TABLE_SIZE",
]

DEFAULT_TABLE_SIZE = 60

# ---------------------------------------------------------------------------
# Fixed-point (320 bit) generation of zeta values, Euler's constant and the
# c_j recurrence.  Stdlib integers only; every value is deterministic.
# ---------------------------------------------------------------------------

_FIX_BITS = 320
_FIX_ONE = 1 << _FIX_BITS

# B_2 .. B_16 as (numerator, denominator): enough Euler-Maclaurin tail terms
# to push the summation error below ~1e-27 at the cutoffs used here.
_BERNOULLI = (
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
)


def _fix_ratio(num: int, den: int) -> int:
    return (num << _FIX_BITS) // den


def _fix_mul(a: int, b: int) -> int:
    return (a * b) >> _FIX_BITS


@lru_cache(maxsize=None)
def _zeta_fix(n: int) -> int:
    """zeta(n), n >= 2, by direct summation with Euler-Maclaurin tail correction."""
    cutoff = 32
    s = sum(_fix_ratio(1, j**n) for j in range(1, cutoff))
    s += _fix_ratio(1, (n - 1) * cutoff ** (n - 1))
    s += _fix_ratio(1, 2 * cutoff**n)
    for i, (bnum, bden) in enumerate(_BERNOULLI, start=1):
        rising = 1
        for r in range(2 * i - 1):
            rising *= n + r
        s += _fix_ratio(bnum * rising, bden * math.factorial(2 * i) * cutoff ** (n + 2 * i - 1))
    return s


@lru_cache(maxsize=None)
def _euler_gamma_fix() -> int:
    """Euler's constant from H_M - ln M with an Euler-Maclaurin tail, M = 64."""
    cutoff = 64
    s = sum(_fix_ratio(1, j) for j in range(1, cutoff + 1))
    # ln 64 = 6 ln 2, ln 2 = sum 1/(k 2^k); 110 terms reach ~1e-35.
    ln2 = sum(_fix_ratio(1, k << k) for k in range(1, 111))
    s -= 6 * ln2
    s -= _fix_ratio(1, 2 * cutoff)
    for i, (bnum, bden) in enumerate(_BERNOULLI, start=1):
        s += _fix_ratio(bnum, bden * 2 * i * cutoff ** (2 * i))
    return s


@lru_cache(maxsize=None)
def _coeff_fix_table(j_max: int) -> tuple:
    """c_1..c_{j_max} in fixed point via (k-1) c_k = gamma c_{k-1} - zeta(2) c_{k-2} + ..."""
    c = [0, _FIX_ONE]  # 1-based; c[1] = 1 exactly
    if j_max >= 2:
        c.append(_euler_gamma_fix())
    for k in range(3, j_max + 1):
        acc = _fix_mul(c[2], c[k - 1])
        sign = -1
        for i in range(2, k):
            acc += sign * _fix_mul(_zeta_fix(i), c[k - i])
            sign = -sign
        c.append(acc // (k - 1))
    return tuple(c)


# ---------------------------------------------------------------------------
# Public surface
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GammaCoeffs:
    """Immutable table of Taylor coefficients c_1..c_J of 1/Gamma.

    Safe to share between threads; all consumers treat it as read-only.
    """

    coeffs: tuple

    @property
    def size(self) -> int:
        return len(self.coeffs)

    def c(self, j: int) -> float:
        """The coefficient c_j, 1-based as in the defining series."""
        if j < 1 or j > len(self.coeffs):
            raise IndexError(f"coefficient index {j} outside 1..{len(self.coeffs)}")
        return self.coeffs[j - 1]


def gamma_coeffs(j_max: int) -> GammaCoeffs:
    """Generate the coefficient table c_1..c_{j_max} (deterministic, j_max >= 2)."""
    if j_max < 2:
        raise ValueError("j_max must be >= 2")
    fix = _coeff_fix_table(j_max)
    return GammaCoeffs(tuple(f / _FIX_ONE for f in fix[1:]))


@lru_cache(maxsize=1)
def default_gamma_table() -> GammaCoeffs:
    """The table used by the evaluation engine (60 coefficients, ample for k <= 8)."""
    return gamma_coeffs(DEFAULT_TABLE_SIZE)


def recip_gamma_deriv_info(
    k: int, eps: float, table: GammaCoeffs | None = None, tol: float = 1e-15
) -> tuple[float, int]:
    """As recip_gamma_deriv, but also report the number of series terms consumed."""
    if k < 0:
        raise ValueError("derivative order k must be >= 0")
    if not abs(eps) <= 0.5:
        raise ValueError("recip_gamma_deriv is restricted to |eps| <= 1/2")
    if table is None:
        table = default_gamma_table()
    coeffs = table.coeffs
    if k + 1 > len(coeffs):
        raise ConvergenceError(f"table of {len(coeffs)} coefficients too small for k={k}")

    # term_j = c_{j+k+1} * (j+1)_k * eps^j; stop after two consecutive terms
    # fall below tol * |partial| (the series is not sign-regular).
    rising = float(math.factorial(k))  # (1)_k
    epspow = 1.0
    s = 0.0
    comp = 0.0
    small = 0
    terms = 0
    for j in range(len(coeffs) - k):
        term = coeffs[j + k] * rising * epspow
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        terms += 1
        if abs(term) < tol * max(abs(s + comp), 1e-300):
            small += 1
            if small >= 2:
                return s + comp, terms
        else:
            small = 0
        epspow *= eps
        rising *= (j + k + 1) / (j + 1)
    raise ConvergenceError(
        f"reciprocal-gamma derivative series not converged with {len(coeffs)} "
        f"coefficients (k={k}, eps={eps})"
    )


def recip_gamma_deriv(
    k: int, eps: float, table: GammaCoeffs | None = None, tol: float = 1e-15
) -> float:
    """k-th derivative of 1/Gamma at 1 + eps, |eps| <= 1/2."""
    return recip_gamma_deriv_info(k, eps, table, tol)[0]


def digamma_near_one(eps: float, table: GammaCoeffs | None = None) -> float:
    """psi(1 + eps) through the identity G^(1)(t) = -psi(t)/Gamma(t)."""
    return -recip_gamma_deriv(1, eps, table) / recip_gamma_deriv(0, eps, table)
