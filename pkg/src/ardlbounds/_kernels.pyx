# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels: incomplete beta/gamma and Householder least squares."""

import numpy as np
from libc.math cimport exp, fabs, lgamma, log, log1p, sqrt, NAN

cdef int MAXIT = 20000
cdef double EPS = 1e-16
cdef double FPMIN = 1e-300


cdef double _betacf(double a, double b, double x) nogil:
    cdef double qab = a + b, qap = a + 1.0, qam = a - 1.0
    cdef double c = 1.0, d, h, aa, delta
    cdef int m, m2
    d = 1.0 - qab * x / qap
    if fabs(d) < FPMIN:
        d = FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, MAXIT + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if fabs(d) < FPMIN:
            d = FPMIN
        c = 1.0 + aa / c
        if fabs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if fabs(d) < FPMIN:
            d = FPMIN
        c = 1.0 + aa / c
        if fabs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < EPS:
            return h
    return NAN


cpdef double betainc(double a, double b, double x):
    """Regularized incomplete beta I_x(a, b); NaN if the fraction fails to converge."""
    cdef double bt
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    bt = exp(lgamma(a + b) - lgamma(a) - lgamma(b) + a * log(x) + b * log1p(-x))
    if x < (a + 1.0) / (a + b + 2.0):
        return bt * _betacf(a, b, x) / a
    return 1.0 - bt * _betacf(b, a, 1.0 - x) / b


cdef double _gamma_series(double a, double x) nogil:
    cdef double ap = a, term = 1.0 / a, total
    cdef int i
    total = term
    for i in range(MAXIT):
        ap += 1.0
        term *= x / ap
        total += term
        if fabs(term) < fabs(total) * EPS:
            return total * exp(-x + a * log(x) - lgamma(a))
    return NAN


cdef double _gamma_cf(double a, double x) nogil:
    cdef double b = x + 1.0 - a, c = 1.0 / FPMIN, d, h, an, delta
    cdef int i
    d = 1.0 / b
    h = d
    for i in range(1, MAXIT + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if fabs(d) < FPMIN:
            d = FPMIN
        c = b + an / c
        if fabs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < EPS:
            return exp(-x + a * log(x) - lgamma(a)) * h
    return NAN


cpdef double gammainc(double a, double x):
    """Regularized lower incomplete gamma P(a, x)."""
    if x <= 0.0:
        return 0.0
    if x < a + 1.0:
        return _gamma_series(a, x)
    return 1.0 - _gamma_cf(a, x)


cpdef double gammaincc(double a, double x):
    """Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x)."""
    if x <= 0.0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _gamma_series(a, x)
    return _gamma_cf(a, x)


def householder_qr(X, y):
    """Householder triangularization of ``X`` applied to ``y``.

    Returns ``(R, qty)`` with ``R`` the k-by-k upper factor and ``qty`` the
    full length-n vector Q^T y. Inputs are not modified.
    """
    cdef double[:, ::1] A = np.array(X, dtype=np.float64, order="C", copy=True)
    cdef double[::1] b = np.array(y, dtype=np.float64, copy=True)
    cdef Py_ssize_t n = A.shape[0], k = A.shape[1]
    cdef double[::1] v = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t i, j, c
    cdef double norm, alpha, vnorm2, s
    for j in range(k):
        norm = 0.0
        for i in range(j, n):
            norm += A[i, j] * A[i, j]
        norm = sqrt(norm)
        if norm == 0.0:
            continue
        alpha = -norm if A[j, j] >= 0.0 else norm
        for i in range(j, n):
            v[i] = A[i, j]
        v[j] -= alpha
        vnorm2 = 0.0
        for i in range(j, n):
            vnorm2 += v[i] * v[i]
        if vnorm2 == 0.0:
            continue
        for c in range(j + 1, k):
            s = 0.0
            for i in range(j, n):
                s += v[i] * A[i, c]
            s *= 2.0 / vnorm2
            for i in range(j, n):
                A[i, c] -= s * v[i]
        s = 0.0
        for i in range(j, n):
            s += v[i] * b[i]
        s *= 2.0 / vnorm2
        for i in range(j, n):
            b[i] -= s * v[i]
        A[j, j] = alpha
        for i in range(j + 1, n):
            A[i, j] = 0.0
    R = np.triu(np.asarray(A)[:k, :k])
    return R, np.asarray(b)


def solve_upper(R, rhs):
    cdef double[:, ::1] r = np.ascontiguousarray(R, dtype=np.float64)
    cdef double[::1] b = np.ascontiguousarray(rhs, dtype=np.float64)
    cdef Py_ssize_t k = r.shape[0], i, j
    out = np.zeros(k)
    cdef double[::1] o = out
    cdef double s
    for i in range(k - 1, -1, -1):
        s = b[i]
        for j in range(i + 1, k):
            s -= r[i, j] * o[j]
        o[i] = s / r[i, i]
    return out


def upper_inverse(R):
    cdef double[:, ::1] r = np.ascontiguousarray(R, dtype=np.float64)
    cdef Py_ssize_t k = r.shape[0], i, j, c
    inv = np.zeros((k, k))
    cdef double[:, ::1] o = inv
    cdef double s
    for c in range(k):
        for i in range(c, -1, -1):
            s = 1.0 if i == c else 0.0
            for j in range(i + 1, c + 1):
                s -= r[i, j] * o[j, c]
            o[i, c] = s / r[i, i]
    return inv
