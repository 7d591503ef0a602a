"""Compiled enumeration loops for the exact backends.

Every kernel scans a contiguous slice ``[lo, hi)`` of Gray-code indices and
returns ``(best_value, best_code)``, breaking ties toward the smaller code.
Only int64 arithmetic is used; callers guarantee no overflow.
"""
import numpy as np
from numba import njit


@njit(cache=True, nogil=True, inline="always")
def _popcount(v):
    v = v - ((v >> 1) & 0x5555555555555555)
    v = (v & 0x3333333333333333) + ((v >> 2) & 0x3333333333333333)
    v = (v + (v >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (v * 0x0101010101010101) >> 56


@njit(cache=True, nogil=True, inline="always")
def _ctz(v):
    b = 0
    while (v & 1) == 0:
        v >>= 1
        b += 1
    return b


@njit(cache=True, nogil=True)
def brute_range(strings, weights, n, lo, hi):
    """Candidates are ``gray(g)`` for ``g`` in ``[lo, hi)`` as n-bit words."""
    m = strings.shape[0]
    # step[b, i]: change of d[i] when bit b of the candidate turns on
    step = np.empty((n, m), np.int64)
    for b in range(n):
        for i in range(m):
            step[b, i] = 1 - 2 * ((strings[i] >> b) & 1)
    c = lo ^ (lo >> 1)
    d = np.empty(m, np.int64)
    best = 0
    for i in range(m):
        d[i] = _popcount(c ^ strings[i])
        best += weights[i] * d[i] * (n - d[i])
    best_c = c
    for g in range(lo + 1, hi):
        b = _ctz(g)
        c ^= np.int64(1) << b
        sign = 1 if (c >> b) & 1 else -1
        row = step[b]
        total = 0
        for i in range(m):
            di = d[i] + sign * row[i]
            d[i] = di
            total += weights[i] * di * (n - di)
        if total < best or (total == best and c < best_c):
            best = total
            best_c = c
    return best, best_c


@njit(cache=True, nogil=True)
def types_range(coef, ones, weights, n, lo, hi):
    """Type assignments ``x = gray(g)``; type j sits at bit ``t-1-j``.

    ``coef[j, i] = e[j] * c_i[j]`` so the Hamming distance of string i to the
    decoded candidate is ``ones[i] + sum_j coef[j, i] * x[j]``.
    """
    t, m = coef.shape
    x = lo ^ (lo >> 1)
    d = np.empty(m, np.int64)
    best = 0
    for i in range(m):
        d[i] = ones[i]
        for j in range(t):
            if (x >> (t - 1 - j)) & 1:
                d[i] += coef[j, i]
        best += weights[i] * d[i] * (n - d[i])
    best_x = x
    for g in range(lo + 1, hi):
        b = _ctz(g)
        x ^= np.int64(1) << b
        j = t - 1 - b
        sign = 1 if (x >> b) & 1 else -1
        row = coef[j]
        total = 0
        for i in range(m):
            di = d[i] + sign * row[i]
            d[i] = di
            total += weights[i] * di * (n - di)
        if total < best or (total == best and x < best_x):
            best = total
            best_x = x
    return best, best_x


@njit(cache=True, nogil=True)
def ilp_range(const, lin, quad, lo, hi):
    """Evaluate the linearized objective with ``y[j, j'] = x[j] * x[j']``.

    Returns ``(best, best_x, violations)`` where ``violations`` counts pair
    constraints found violated at the forced ``y`` (always 0 when correct).
    """
    t = lin.shape[0]
    x = np.zeros(t, np.int64)
    y = np.zeros((t, t), np.int64)
    code = lo ^ (lo >> 1)
    obj = const
    for j in range(t):
        x[j] = (code >> (t - 1 - j)) & 1
        obj += lin[j] * x[j]
    for j in range(t):
        for k in range(j + 1, t):
            y[j, k] = x[j] * x[k]
            y[k, j] = y[j, k]
            obj += quad[j, k] * y[j, k]
    best = obj
    best_x = code
    violations = 0
    for g in range(lo + 1, hi):
        b = _ctz(g)
        code ^= np.int64(1) << b
        j = t - 1 - b
        x[j] = 1 - x[j]
        obj += lin[j] if x[j] else -lin[j]
        for k in range(t):
            if k == j:
                continue
            ny = x[j] * x[k]
            obj += quad[j, k] * (ny - y[j, k])
            y[j, k] = ny
            y[k, j] = ny
            if ny > x[j] or ny > x[k] or x[j] + x[k] - ny > 1:
                violations += 1
        if obj < best or (obj == best and code < best_x):
            best = obj
            best_x = code
    return best, best_x, violations
