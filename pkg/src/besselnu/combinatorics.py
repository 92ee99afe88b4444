"""Exact combinatorial tables: signed Stirling numbers of the first kind and
modified generalized harmonic numbers.

Both tables are exact (Python integers / fractions).  The signed Stirling
numbers s(n, k) are the coefficients in the expansion of [ln(1+z)]^k; the
modified harmonic numbers are the alternating binomial sums

    H-hat_m^(k) = sum_{j=1}^{m} (-1)^(j-1) C(m, j) / j^k,

which coincide with the ordinary harmonic numbers at k = 1.
"""

import math
from fractions import Fraction

__all__ = [
    "STIRLING_CAP",
    "StirlingTable",
    "stirling_first",
    "HarmonicTable",
    "mod_harmonic",
    "mod_harmonic_explicit",
]

# Exactness never degrades (arbitrary-size integers); the cap just bounds the
# triangle kept in memory.
STIRLING_CAP = 64


class StirlingTable:
    """Triangle of signed Stirling numbers of the first kind, exact integers.

    Row n holds s(n, 0..n), built with s(n+1, k) = s(n, k-1) - n * s(n, k).
    Immutable once constructed.
    """

    def __init__(self, n_max: int):
        if n_max < 0:
            raise ValueError("n_max must be >= 0")
        if n_max > STIRLING_CAP:
            raise ValueError(f"n_max={n_max} exceeds the supported cap {STIRLING_CAP}")
        rows = [[1]]
        for n in range(n_max):
            prev = rows[n]
            row = [0] * (n + 2)
            for k in range(1, n + 2):
                row[k] = prev[k - 1] - (n * prev[k] if k <= n else 0)
            rows.append(row)
        self._rows = rows
        self.n_max = n_max

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("indices must be non-negative")
        if n > self.n_max:
            raise ValueError(f"n={n} outside table (n_max={self.n_max})")
        if k > n:
            return 0
        return self._rows[n][k]


_default_stirling = StirlingTable(STIRLING_CAP)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k); 0 for k > n; n <= 64."""
    return _default_stirling.value(n, k)


class HarmonicTable:
    """Grid of modified generalized harmonic numbers H-hat_m^(k), exact rationals.

    Built by the (index-corrected) recurrence
        H-hat_{m+1}^(k) = H-hat_m^(k) + H-hat_{m+1}^(k-1) / (m+1),
    with H-hat_0^(k) = delta_{k,0} and H-hat_m^(0) = 1.  The alternating
    binomial sum stays available as mod_harmonic_explicit, usable as an
    independent oracle (it cancels catastrophically in floating point for
    m beyond ~30, so it is never the production route).
    """

    def __init__(self, m_max: int = 64, k_max: int = 12):
        if m_max < 0 or k_max < 0:
            raise ValueError("table dimensions must be >= 0")
        rows = [[Fraction(1)] + [Fraction(0)] * k_max]
        for m in range(m_max):
            prev = rows[m]
            row = [Fraction(1)]
            for k in range(1, k_max + 1):
                row.append(prev[k] + row[k - 1] / (m + 1))
            rows.append(row)
        self._rows = rows
        self.m_max = m_max
        self.k_max = k_max

    def value(self, m: int, k: int) -> Fraction:
        if m < 0 or k < 0:
            raise ValueError("indices must be non-negative")
        if m > self.m_max or k > self.k_max:
            raise ValueError(
                f"(m={m}, k={k}) outside table (m_max={self.m_max}, k_max={self.k_max})"
            )
        if m == 0:
            return Fraction(1) if k == 0 else Fraction(0)
        return self._rows[m][k]


_default_harmonic = HarmonicTable()


def mod_harmonic(m: int, k: int) -> Fraction:
    """H-hat_m^(k) as an exact Fraction (recurrence route), m <= 64, k <= 12."""
    return _default_harmonic.value(m, k)


def mod_harmonic_explicit(m: int, k: int) -> Fraction:
    """H-hat_m^(k) by the alternating binomial sum, exact; test oracle route."""
    if m < 0 or k < 0:
        raise ValueError("indices must be non-negative")
    if m == 0:
        return Fraction(1) if k == 0 else Fraction(0)
    return sum(
        Fraction((-1) ** (j - 1) * math.comb(m, j), j**k) for j in range(1, m + 1)
    )
