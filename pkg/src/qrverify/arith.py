"""Exact modular arithmetic, primality and prime ranges.

Python integers are unbounded, so products of two residues below 2**63 are
always exact; no widening tricks are needed.
"""

import math

import numpy as np

__all__ = [
    "MAX_MODULUS",
    "PrimeModulus",
    "least_nonneg_residue",
    "mod_pow",
    "is_prime",
    "primes_in_range",
]

MAX_MODULUS = 1 << 63

# Deterministic for every n < 3.3 * 10**24, far beyond 64 bits.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class PrimeModulus(int):
    """An odd prime ``p < 2**63``, checked on construction.

    Behaves as a plain ``int`` everywhere else.
    """

    def __new__(cls, p):
        if isinstance(p, PrimeModulus):
            return p
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
            raise TypeError(f"modulus must be an integer, got {type(p).__name__}")
        p = int(p)
        if p < 3 or p >= MAX_MODULUS:
            raise ValueError(f"modulus {p} outside [3, 2**63)")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        return super().__new__(cls, p)

    def __repr__(self):
        return f"PrimeModulus({int(self)})"

    @property
    def half(self):
        """(p - 1) // 2, the size of the half range 1..(p-1)/2."""
        return (int(self) - 1) // 2


def least_nonneg_residue(m, p):
    """Return the representative of ``m`` modulo ``p`` in ``[0, p)``.

    Negative ``m`` is accepted.
    """
    return int(m) % int(p)


def mod_pow(base, exponent, p):
    """Square-and-multiply ``base**exponent mod p``."""
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    p = int(p)
    result = 1 % p
    base = int(base) % p
    e = int(exponent)
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def _decompose(n):
    # n - 1 = d * 2**s with d odd
    d = n - 1
    s = 0
    while not d & 1:
        d >>= 1
        s += 1
    return d, s


def _strong_probable_prime(n, a, d, s):
    x = mod_pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n):
    """Exact primality test for ``n < 2**64`` (Miller-Rabin, fixed bases)."""
    n = int(n)
    if n < 2:
        return False
    if n >= 1 << 64:
        raise ValueError("n is too large")
    for q in _MR_BASES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = _decompose(n)
    return all(_strong_probable_prime(n, a, d, s) for a in _MR_BASES)


def _base_primes(limit):
    if limit < 2:
        return np.array([], dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return np.flatnonzero(sieve)


def primes_in_range(lo, hi, segment=1 << 20):
    """All primes in ``[lo, hi]`` in increasing order, by a segmented sieve.

    Returns a list of :class:`PrimeModulus` (the prime 2 is returned as a
    plain ``int`` since it is not an odd modulus).
    """
    lo, hi = int(lo), int(hi)
    if lo < 2 or lo > hi:
        raise ValueError(f"need 2 <= lo <= hi, got lo={lo}, hi={hi}")
    base = _base_primes(math.isqrt(hi))
    out = []
    start = lo
    while start <= hi:
        stop = min(start + segment, hi + 1)
        mask = np.ones(stop - start, dtype=bool)
        for q in base:
            q = int(q)
            first = max(q * q, -(-start // q) * q)
            if first >= stop:
                continue
            mask[first - start :: q] = False
        for n in (np.flatnonzero(mask) + start).tolist():
            out.append(n if n == 2 else int.__new__(PrimeModulus, n))
        start = stop
    return out
