"""Pure-Python fallback for the hot series kernels.

Line-for-line twin of the compiled module _kernels_cy; the backend is chosen
in _kernels at import time.  Both kernels accumulate the m-series with
Neumaier compensated summation and stop after two consecutive terms fall
below tol * |partial sum| (the series alternate, one small term is not
evidence of convergence).
"""

_TINY = 1e-300


def q_weighted_series(x, t, n_split, w, s0, tol, max_terms):
    """s0 + sum over the series tail of (-x)^m/m! * dot(w, Q_{m+n_split}(t)).

    Q_M is the column of scaled reciprocal-Pochhammer derivatives
    Q_M^(0..K)(t), advanced one M per term by its recurrence.  The sum runs
    from m = max(0, -n_split) so the Q index M = m + n_split starts at
    max(n_split, 0).  Returns (total, terms, last_term_abs, converged).
    """
    K = len(w) - 1
    if K < 0 or K > 15:
        raise ValueError("weight vector must have 1..16 entries")
    q = [0.0] * (K + 1)
    q[0] = 1.0
    M = 0
    while M < n_split:
        inv = 1.0 / (t + M)
        q[0] *= inv
        for j in range(1, K + 1):
            q[j] = (q[j] - q[j - 1]) * inv
        M += 1
    m = M - n_split
    coef = 1.0
    for i in range(1, m + 1):
        coef *= -x / i
    s = s0
    comp = 0.0
    small = 0
    terms = 0
    last = 0.0
    converged = False
    while terms < max_terms:
        d = 0.0
        for j in range(K + 1):
            d += w[j] * q[j]
        term = coef * d
        tmp = s + term
        if abs(s) >= abs(term):
            comp += (s - tmp) + term
        else:
            comp += (term - tmp) + s
        s = tmp
        terms += 1
        last = abs(term)
        if last < tol * max(abs(s + comp), _TINY):
            small += 1
            if small >= 2:
                converged = True
                break
        else:
            small = 0
        inv = 1.0 / (t + M)
        q[0] *= inv
        for j in range(1, K + 1):
            q[j] = (q[j] - q[j - 1]) * inv
        M += 1
        m += 1
        coef *= -x / m
    return s + comp, terms, last, converged


def harmonic_weighted_series(x, n_order, v, s0, tol, max_terms):
    """s0 + sum over M of (-x)^(M-n_order)/((M-n_order)! M!) * dot(v, H-hat_M).

    H-hat_M is the column of modified generalized harmonic numbers advanced by
    H-hat_{M+1}^(k) = H-hat_M^(k) + H-hat_{M+1}^(k-1)/(M+1).  M starts at
    max(0, n_order); n_order is the (integer) Bessel order and may be negative.
    Returns (total, terms, last_term_abs, converged).
    """
    K = len(v) - 1
    if K < 0 or K > 15:
        raise ValueError("weight vector must have 1..16 entries")
    h = [0.0] * (K + 1)
    h[0] = 1.0
    M = 0
    while M < n_order:
        for j in range(1, K + 1):
            h[j] = h[j] + h[j - 1] / (M + 1)
        M += 1
    invfact = 1.0
    for i in range(2, M + 1):
        invfact /= i
    m = M - n_order
    coef = 1.0
    for i in range(1, m + 1):
        coef *= -x / i
    s = s0
    comp = 0.0
    small = 0
    terms = 0
    last = 0.0
    converged = False
    while terms < max_terms:
        d = 0.0
        for j in range(K + 1):
            d += v[j] * h[j]
        term = coef * invfact * d
        tmp = s + term
        if abs(s) >= abs(term):
            comp += (s - tmp) + term
        else:
            comp += (term - tmp) + s
        s = tmp
        terms += 1
        last = abs(term)
        if last < tol * max(abs(s + comp), _TINY):
            small += 1
            if small >= 2:
                converged = True
                break
        else:
            small = 0
        for j in range(1, K + 1):
            h[j] = h[j] + h[j - 1] / (M + 1)
        M += 1
        invfact /= M
        m += 1
        coef *= -x / m
    return s + comp, terms, last, converged
