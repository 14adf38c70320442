"""Characteristic polynomial modulo a word-sized prime.

Hessenberg reduction by elementary similarity transforms followed by the
standard Hessenberg determinant recurrence.  All values stay below p < 2^31,
so every product fits in int64.  Compiled with numba when it is importable;
the plain-Python path is identical and only slower.
"""
from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    njit = None


def _powmod(a, e, p):
    result = 1
    a %= p
    while e > 0:
        if e & 1:
            result = result * a % p
        a = a * a % p
        e >>= 1
    return result


def _charpoly_mod_p(m, p):
    n = m.shape[0]
    h = m.copy()
    for j in range(n - 2):
        piv = -1
        for i in range(j + 1, n):
            if h[i, j] != 0:
                piv = i
                break
        if piv == -1:
            continue
        if piv != j + 1:
            for c in range(n):
                t = h[piv, c]
                h[piv, c] = h[j + 1, c]
                h[j + 1, c] = t
            for r in range(n):
                t = h[r, piv]
                h[r, piv] = h[r, j + 1]
                h[r, j + 1] = t
        inv = _powmod(h[j + 1, j], p - 2, p)
        for i in range(j + 2, n):
            u = h[i, j] * inv % p
            if u == 0:
                continue
            for c in range(n):
                h[i, c] = (h[i, c] - u * h[j + 1, c]) % p
            for r in range(n):
                h[r, j + 1] = (h[r, j + 1] + u * h[r, i]) % p

    # polys[k] holds the char poly of the leading k x k block, constant first
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        d = h[k - 1, k - 1]
        for c in range(k):
            polys[k, c + 1] = polys[k - 1, c]
            polys[k, c] = (polys[k, c] - d * polys[k - 1, c]) % p
        t = 1
        for i in range(k - 1, 0, -1):
            t = t * h[i, i - 1] % p
            if t == 0:
                break
            w = h[i - 1, k - 1] * t % p
            if w == 0:
                continue
            for c in range(i):
                polys[k, c] = (polys[k, c] - w * polys[i - 1, c]) % p
    return polys[n].copy()


if njit is not None:
    _powmod = njit(cache=True)(_powmod)
    _charpoly_mod_p = njit(cache=True)(_charpoly_mod_p)


def charpoly_mod_p(m: np.ndarray, p: int) -> np.ndarray:
    """Coefficients (constant first, length n+1) of det(xI - m) mod p."""
    return _charpoly_mod_p(np.ascontiguousarray(m, dtype=np.int64) % p, p)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIMES: list[int] = []


def primes_below_2_31(count: int) -> list[int]:
    """The `count` largest primes below 2^31, descending."""
    candidate = _PRIMES[-1] - 2 if _PRIMES else (1 << 31) - 1
    while len(_PRIMES) < count:
        if _is_prime(candidate):
            _PRIMES.append(candidate)
        candidate -= 2
    return _PRIMES[:count]
