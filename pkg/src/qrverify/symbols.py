"""Legendre and Jacobi symbols by independent routes.

``legendre_euler`` is the workhorse, ``jacobi`` uses binary reduction with
reciprocity, and ``legendre_gauss_lemma`` counts directly. They share no
code beyond ``%``.
"""

import numpy as np

from .arith import PrimeModulus, mod_pow

__all__ = [
    "legendre_euler",
    "jacobi",
    "legendre_gauss_lemma",
    "residue_table",
]


def legendre_euler(a, p):
    """Legendre symbol ``(a/p)`` by Euler's criterion."""
    p = PrimeModulus(p)
    if a % p == 0:
        return 0
    r = mod_pow(a, (p - 1) // 2, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise AssertionError(f"Euler criterion gave {r} for a={a}, p={p}")


def jacobi(a, n):
    """Jacobi symbol ``(a/n)`` for odd ``n >= 1``.

    Negative ``a`` is fine; ``(a/1) = 1`` for every ``a``.
    """
    a, n = int(a), int(n)
    if n < 1 or not n & 1:
        raise ValueError(f"Jacobi symbol needs odd n >= 1, got {n}")
    a %= n
    sign = 1
    while a:
        while not a & 1:
            a >>= 1
            if n & 7 in (3, 5):
                sign = -sign
        a, n = n, a
        if a & 3 == 3 and n & 3 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def legendre_gauss_lemma(a, p):
    """Legendre symbol as ``(-1)**c``, ``c`` counting ``k <= (p-1)/2`` with
    ``{ka}_p > p/2``. Deliberately naive: this is an oracle.
    """
    p = PrimeModulus(p)
    if a % p == 0:
        raise ValueError(f"Gauss's lemma needs p not dividing a (a={a}, p={p})")
    half = p // 2  # for odd p, r > p/2 iff r > (p-1)/2
    if p < 1 << 31:
        k = np.arange(1, half + 1, dtype=np.int64)
        c = int(np.count_nonzero(k * (a % p) % p > half))
    else:
        c = sum(1 for k in range(1, half + 1) if k * a % p > half)
    return -1 if c & 1 else 1


def residue_table(p):
    """Array ``t`` of length ``p`` with ``t[z] = (z/p)``, built by squaring."""
    p = PrimeModulus(p)
    if p >= 1 << 31:
        raise ValueError("residue_table is for moduli below 2**31")
    t = -np.ones(int(p), dtype=np.int8)
    x = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    t[x * x % p] = 1
    t[0] = 0
    return t
