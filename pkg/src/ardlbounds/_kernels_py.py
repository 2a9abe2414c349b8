"""Pure-Python versions of the numerical kernels.

Same algorithms as ``_kernels.pyx``; used when the compiled extension is
absent or ``ARDLBOUNDS_PURE_PYTHON`` is set.
"""

from __future__ import annotations

import math

import numpy as np

MAXIT = 20000
EPS = 1e-16
FPMIN = 1e-300


def _betacf(a: float, b: float, x: float) -> float:
    # modified Lentz evaluation of the incomplete-beta continued fraction
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < FPMIN:
        d = FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, MAXIT + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < FPMIN:
            d = FPMIN
        c = 1.0 + aa / c
        if abs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < FPMIN:
            d = FPMIN
        c = 1.0 + aa / c
        if abs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < EPS:
            return h
    return math.nan


def betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b); NaN if the fraction fails to converge."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    lbt = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    bt = math.exp(lbt)
    if x < (a + 1.0) / (a + b + 2.0):
        return bt * _betacf(a, b, x) / a
    return 1.0 - bt * _betacf(b, a, 1.0 - x) / b


def _gamma_series(a: float, x: float) -> float:
    ap = a
    term = 1.0 / a
    total = term
    for _ in range(MAXIT):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * EPS:
            return total * math.exp(-x + a * math.log(x) - math.lgamma(a))
    return math.nan


def _gamma_cf(a: float, x: float) -> float:
    b = x + 1.0 - a
    c = 1.0 / FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, MAXIT + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < FPMIN:
            d = FPMIN
        c = b + an / c
        if abs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < EPS:
            return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h
    return math.nan


def gammainc(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x)."""
    if x <= 0.0:
        return 0.0
    if x < a + 1.0:
        return _gamma_series(a, x)
    return 1.0 - _gamma_cf(a, x)


def gammaincc(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x)."""
    if x <= 0.0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _gamma_series(a, x)
    return _gamma_cf(a, x)


def householder_qr(X: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder triangularization of ``X`` applied to ``y``.

    Returns ``(R, qty)`` with ``R`` the k-by-k upper factor and ``qty`` the
    full length-n vector Q^T y. Inputs are not modified.
    """
    A = np.array(X, dtype=float, order="C", copy=True)
    b = np.array(y, dtype=float, copy=True)
    n, k = A.shape
    for j in range(k):
        col = A[j:, j]
        norm = math.sqrt(float(col @ col))
        if norm == 0.0:
            continue
        alpha = -norm if col[0] >= 0.0 else norm
        v = col.copy()
        v[0] -= alpha
        vnorm2 = float(v @ v)
        if vnorm2 == 0.0:
            continue
        if j + 1 < k:
            block = A[j:, j + 1:]
            block -= np.outer(v, (2.0 / vnorm2) * (v @ block))
        b[j:] -= (2.0 / vnorm2) * float(v @ b[j:]) * v
        A[j, j] = alpha
        A[j + 1:, j] = 0.0
    return np.triu(A[:k, :k]), b


def solve_upper(R: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    k = R.shape[0]
    out = np.zeros(k)
    for i in range(k - 1, -1, -1):
        out[i] = (rhs[i] - R[i, i + 1:] @ out[i + 1:]) / R[i, i]
    return out


def upper_inverse(R: np.ndarray) -> np.ndarray:
    k = R.shape[0]
    inv = np.zeros((k, k))
    eye = np.eye(k)
    for j in range(k):
        inv[:, j] = solve_upper(R, eye[:, j])
    return inv
