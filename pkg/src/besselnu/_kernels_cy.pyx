# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled twin of _kernels_py: the hot series kernels as C loops."""

from libc.math cimport fabs

cdef double _TINY = 1e-300


cdef inline double _maxd(double a, double b) nogil:
    return a if a > b else b


def q_weighted_series(double x, double t, long n_split, double[::1] w,
                      double s0, double tol, long max_terms):
    """See _kernels_py.q_weighted_series (identical contract)."""
    cdef Py_ssize_t K = w.shape[0] - 1
    if K < 0 or K > 15:
        raise ValueError("weight vector must have 1..16 entries")
    cdef double q[16]
    cdef Py_ssize_t j
    for j in range(K + 1):
        q[j] = 0.0
    q[0] = 1.0
    cdef long M = 0
    cdef double inv
    while M < n_split:
        inv = 1.0 / (t + M)
        q[0] *= inv
        for j in range(1, K + 1):
            q[j] = (q[j] - q[j - 1]) * inv
        M += 1
    cdef long m = M - n_split
    cdef double coef = 1.0
    cdef long i
    for i in range(1, m + 1):
        coef *= -x / i
    cdef double s = s0
    cdef double comp = 0.0
    cdef int small = 0
    cdef long terms = 0
    cdef double last = 0.0
    cdef bint converged = False
    cdef double d, term, tmp
    while terms < max_terms:
        d = 0.0
        for j in range(K + 1):
            d += w[j] * q[j]
        term = coef * d
        tmp = s + term
        if fabs(s) >= fabs(term):
            comp += (s - tmp) + term
        else:
            comp += (term - tmp) + s
        s = tmp
        terms += 1
        last = fabs(term)
        if last < tol * _maxd(fabs(s + comp), _TINY):
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


def harmonic_weighted_series(double x, long n_order, double[::1] v,
                             double s0, double tol, long max_terms):
    """See _kernels_py.harmonic_weighted_series (identical contract)."""
    cdef Py_ssize_t K = v.shape[0] - 1
    if K < 0 or K > 15:
        raise ValueError("weight vector must have 1..16 entries")
    cdef double h[16]
    cdef Py_ssize_t j
    for j in range(K + 1):
        h[j] = 0.0
    h[0] = 1.0
    cdef long M = 0
    while M < n_order:
        for j in range(1, K + 1):
            h[j] = h[j] + h[j - 1] / (M + 1)
        M += 1
    cdef double invfact = 1.0
    cdef long i
    for i in range(2, M + 1):
        invfact /= i
    cdef long m = M - n_order
    cdef double coef = 1.0
    for i in range(1, m + 1):
        coef *= -x / i
    cdef double s = s0
    cdef double comp = 0.0
    cdef int small = 0
    cdef long terms = 0
    cdef double last = 0.0
    cdef bint converged = False
    cdef double d, term, tmp
    while terms < max_terms:
        d = 0.0
        for j in range(K + 1):
            d += v[j] * h[j]
        term = coef * invfact * d
        tmp = s + term
        if fabs(s) >= fabs(term):
            comp += (s - tmp) + term
        else:
            comp += (term - tmp) + s
        s = tmp
        terms += 1
        last = fabs(term)
        if last < tol * _maxd(fabs(s + comp), _TINY):
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
