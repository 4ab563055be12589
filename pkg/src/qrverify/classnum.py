"""Class numbers h(-p) for primes p = 3 (mod 4), p > 3.

Two independent routes: Dirichlet's weighted residue sum
``sum_{z=1}^{p-1} z (z/p) = -p h(-p)`` and a count of reduced binary
quadratic forms of discriminant ``-p``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .arith import PrimeModulus
from .symbols import residue_table

__all__ = [
    "ClassNumberResult",
    "class_number_dirichlet",
    "class_number_forms_oracle",
    "reduced_forms",
    "qr_sum",
]


@dataclass(frozen=True)
class ClassNumberResult:
    p: int
    weighted_sum: int
    h: int


def _check_domain(p):
    p = PrimeModulus(p)
    if p % 4 != 3 or p == 3:
        raise ValueError(f"h(-p) is only computed for primes p = 3 (mod 4), p > 3; got {p}")
    return p


def _weighted_sum(p):
    z = np.arange(int(p), dtype=np.int64)
    # |sum| < p**2 / 2 < 2**63 for the table-backed range (p < 2**31)
    return int(np.dot(z, residue_table(p).astype(np.int64)))


def class_number_dirichlet(p):
    p = _check_domain(p)
    s = _weighted_sum(p)
    h, r = divmod(-s, int(p))
    if r or h <= 0:
        raise ArithmeticError(f"weighted sum {s} is not -p*h with h > 0 (p={p})")
    return ClassNumberResult(p=int(p), weighted_sum=s, h=h)


def reduced_forms(p):
    """Reduced forms ``(A, B, C)`` with ``B**2 - 4AC = -p``.

    Reduced means ``|B| <= A <= C`` with ``B >= 0`` whenever ``|B| = A`` or
    ``A = C``. Since ``-p`` is odd, ``B`` is odd.
    """
    p = _check_domain(p)
    forms = []
    for A in range(1, math.isqrt(p // 3) + 1):
        for B in range(-A, A + 1):
            if not B & 1:
                continue
            num = B * B + p
            if num % (4 * A):
                continue
            C = num // (4 * A)
            if C < A:
                continue
            if B < 0 and (-B == A or A == C):
                continue
            assert math.gcd(A, B, C) == 1, (A, B, C)
            forms.append((A, B, C))
    return forms


def class_number_forms_oracle(p):
    return len(reduced_forms(p))


def qr_sum(p, sign):
    """Sum of ``z`` in ``[1, p-1]`` with ``(z/p) = sign``."""
    p = PrimeModulus(p)
    if p <= 3:
        raise ValueError("qr_sum needs p > 3")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    z = np.arange(int(p), dtype=np.int64)
    return int(z[residue_table(p) == sign].sum())
