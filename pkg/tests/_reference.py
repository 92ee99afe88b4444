"""Extended-precision reference oracles shared by the test modules.

mpmath appears here only (test fixtures); the package itself never imports it.
"""

import mpmath as mp

from besselnu.oracle import CENTRAL_STENCILS

mp.mp.dps = 50


def fd_recip_gamma_deriv(k: int, eps: float, base_step: str = "0.01", levels: int = 4) -> float:
    """Richardson-extrapolated central difference of 1/Gamma at 1 + eps.

    Extended precision: the k = 5, 6 stencils are unusable in doubles (the
    roundoff floor 64*eps_mach/h^6 meets the truncation wall), while here the
    default schedule (base 1e-2, four halving levels) is exact to ~1e-16.
    """
    if k == 0:
        return float(mp.rgamma(1 + mp.mpf(eps)))
    offsets, coeffs = CENTRAL_STENCILS[k]
    x = 1 + mp.mpf(eps)
    prev_row = []
    diag = []
    for i in range(levels):
        h = mp.mpf(base_step) / 2**i
        d = mp.fsum(mp.mpf(c) * mp.rgamma(x + o * h) for o, c in zip(offsets, coeffs)) / h**k
        row = [d]
        for j in range(1, i + 1):
            fac = mp.mpf(4) ** j
            row.append((fac * row[j - 1] - prev_row[j - 1]) / (fac - 1))
        prev_row = row
        diag.append(row[-1])
    return float(diag[-1])


def fd_recip_gamma_at_zero(k: int, base_step: str = "0.01", levels: int = 4) -> float:
    """Central differences of 1/Gamma at t = 0 (for Taylor-coefficient checks)."""
    offsets, coeffs = CENTRAL_STENCILS[k]
    prev_row = []
    diag = []
    for i in range(levels):
        h = mp.mpf(base_step) / 2**i
        d = mp.fsum(mp.mpf(c) * mp.rgamma(o * h) for o, c in zip(offsets, coeffs)) / h**k
        row = [d]
        for j in range(1, i + 1):
            fac = mp.mpf(4) ** j
            row.append((fac * row[j - 1] - prev_row[j - 1]) / (fac - 1))
        prev_row = row
        diag.append(row[-1])
    return float(diag[-1])


def first_deriv_nonneg_integer(n: int, z: float, terms: int = 40) -> float:
    """Direct extended-precision summation of the integer-order k = 1 form
    (Euler-constant form), n >= 0."""
    zm = mp.mpf(z)
    x = zm * zm / 4
    s = mp.fsum(
        (-x) ** m / (mp.factorial(m) * mp.factorial(m + n)) * mp.harmonic(m + n)
        for m in range(terms)
    )
    return float((mp.log(zm / 2) + mp.euler) * mp.besselj(n, zm) - (zm / 2) ** n * s)


def first_deriv_negative_integer(n_abs: int, z: float, terms: int = 40) -> float:
    """Direct extended-precision summation of the negative-integer k = 1 form
    (factorial head plus harmonic tail), order nu = -n_abs."""
    zm = mp.mpf(z)
    x = zm * zm / 4
    head = mp.fsum(
        (x**m / mp.factorial(m)) * mp.factorial(n_abs - m - 1) for m in range(n_abs)
    )
    tail = mp.fsum(
        ((-x) ** m / (mp.factorial(m) * mp.factorial(m - n_abs))) * mp.harmonic(m - n_abs)
        for m in range(n_abs, n_abs + terms)
    )
    return float(
        (mp.log(zm / 2) + mp.euler) * mp.besselj(-n_abs, zm)
        - (zm / 2) ** (-n_abs) * ((-1) ** n_abs * head + tail)
    )


def rel_err(value: float, reference: float) -> float:
    return abs(value - reference) / max(abs(reference), 1e-300)
