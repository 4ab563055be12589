"""Statistics of quadratic residues modulo a prime.

The central quantity is

    N_p(a, b) = #{1 <= x <= (p-1)/2 : {x^2 + b}_p > {a x^2 + b}_p}

and, for fixed ``(p, b)``, the value sets ``S`` (over quadratic residues
``a``) and ``T`` (over non-residues ``a``). Every count has a brute-force
route; the closed forms are evaluated separately and compared by callers.

Scalar functions here are the reference implementations. The ``*_table``
and ``*_grid`` functions are numpy kernels of the same enumerations for
range sweeps and are tested against the scalar versions.
"""

from dataclasses import dataclass, field

import numpy as np

from .arith import PrimeModulus, least_nonneg_residue
from .classnum import class_number_dirichlet, qr_sum
from .symbols import legendre_euler, jacobi, residue_table

__all__ = [
    "CountSpec",
    "ResidueCountReport",
    "count_N",
    "count_N_formula",
    "count_N_rows",
    "count_N_table",
    "count_N_grid",
    "count_N_formula_rows",
    "count_N_formula_grid",
    "split_S_T",
    "compute_S_T",
    "closed_form_S",
    "cardinality_prediction",
    "consecutive_pattern_counts",
    "linear_shift_count",
    "linear_shift_rows",
    "linear_shift_table",
    "sun2020_check",
    "sun2020_table",
    "half_range_squares",
    "count_inversions",
    "count_inversions_naive",
    "half_range_inversion_check",
    "fractional_identity_check",
]


@dataclass(frozen=True)
class CountSpec:
    """Arguments of ``N_p(a, b)``; ``b`` is reduced mod ``p``."""

    p: int
    a: int
    b: int = 0

    def __post_init__(self):
        p = PrimeModulus(self.p)
        if not 1 < self.a < p:
            raise ValueError(f"need 1 < a < p, got a={self.a}, p={p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "b", least_nonneg_residue(self.b, p))

    @property
    def epsilon(self):
        return legendre_euler(self.a, self.p)

    @property
    def delta(self):
        return legendre_euler(self.a * (1 - self.a), self.p)


@dataclass
class ResidueCountReport:
    p: int
    b: int
    S: list
    T: list
    # (a, epsilon, delta, N) for each a in [2, p-1], when requested
    per_a: list = field(default=None, repr=False)


def count_N(p, a, b=0):
    """``N_p(a, b)`` by direct enumeration of ``x`` in ``[1, (p-1)/2]``."""
    spec = CountSpec(p, a, b)
    p, a, b = spec.p, spec.a, spec.b
    n = 0
    for x in range(1, (p - 1) // 2 + 1):
        lhs = (x * x + b) % p
        rhs = (a * x * x + b) % p
        # (a - 1) x^2 is a unit, so the two residues never coincide
        assert lhs != rhs, (p, a, b, x)
        if lhs > rhs:
            n += 1
    return n


def _shifted_sum(p, table, sign, b):
    return sum((y + b) % p for y in range(1, p) if table[y] == sign)


def count_N_formula(p, a, b=0):
    """``N_p(a, b)`` from the residue-sum identity, in exact integers.

    ``p N = p(p-1)/2 + sum_{(x/p)=1} {x+b}_p - sum_{(y/p)=e} {y+b}_p
    - sum_{(z/p)=d e} z`` with ``e = (a/p)`` and ``d = (a(1-a)/p)``; for
    ``e = 1`` the two shifted sums cancel.
    """
    spec = CountSpec(p, a, b)
    p, b = spec.p, spec.b
    if p <= 3:
        raise ValueError("count_N_formula needs p > 3")
    eps, delta = spec.epsilon, spec.delta
    scaled = p * (p - 1) // 2 - qr_sum(p, delta * eps)
    if eps == -1:
        table = residue_table(p)
        scaled += _shifted_sum(p, table, 1, b) - _shifted_sum(p, table, -1, b)
    n, r = divmod(scaled, p)
    assert r == 0, f"p*N = {scaled} not divisible by p={p} (a={a}, b={b})"
    return n


def _wrap(K, p):
    # K is unsigned with values in [0, 2p); reduce in place. K - p wraps
    # to something above K when K < p, so the minimum is the residue.
    np.minimum(K, K - K.dtype.type(p), out=K)
    return K


def _multiples_of_squares(p):
    """``sq`` (the half-range squares) and ``M[a, i] = a * sq[i] mod p``.

    ``M`` is built by doubling rows: ``M[n:2n] = M[:n] + M[n]``.
    """
    x = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    sq = x * x % p
    M = np.empty((p, sq.size), dtype=np.uint16)
    M[0] = 0
    n = 1
    while n < p:
        m = min(n, p - n)
        row = (n * sq % p).astype(np.uint16)
        np.add(M[:m], row, out=M[n : n + m])
        _wrap(M[n : n + m], p)
        n += m
    return sq, M


def _count_rows(sq, M, p, b, chunk=256):
    lhs = ((sq + b) % p).astype(M.dtype)
    shift = M.dtype.type(b)
    n = np.empty(p, dtype=np.int64)
    for lo in range(0, p, chunk):
        K = _wrap(M[lo : lo + chunk] + shift, p)
        n[lo : lo + chunk] = np.count_nonzero(K < lhs, axis=1)
    n[:2] = -1
    return n


def _count_rows_wide(p, b, chunk=64):
    x = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    sq = x * x % p
    lhs = (sq + b) % p
    n = np.empty(p, dtype=np.int64)
    for lo in range(0, p, chunk):
        a = np.arange(lo, min(lo + chunk, p), dtype=np.int64)
        K = (a[:, None] * sq[None, :] + b) % p
        n[lo : lo + a.size] = np.count_nonzero(K < lhs, axis=1)
    n[:2] = -1
    return n


def count_N_rows(p, bs):
    """Brute-force ``N_p(a, b)`` for every ``a`` and each ``b`` in ``bs``.

    Returns an array ``R[j, a]`` for ``b = bs[j]`` and ``a`` in ``[0, p)``;
    columns ``a = 0, 1`` are outside the domain and hold -1.
    """
    p = PrimeModulus(p)
    n = int(p)
    bs = [least_nonneg_residue(b, n) for b in bs]
    if n < 1 << 15:
        sq, M = _multiples_of_squares(n)
        rows = [_count_rows(sq, M, n, b) for b in bs]
    elif n < 1 << 31:
        rows = [_count_rows_wide(n, b) for b in bs]
    else:
        raise ValueError("vectorized counts need p < 2**31")
    return np.array(rows, dtype=np.int64).reshape(len(bs), n)


def count_N_table(p, b=0):
    """``count_N_rows`` for a single ``b``: an array indexed by ``a``."""
    return count_N_rows(p, [b])[0]


def count_N_grid(p):
    """Brute-force ``N_p(a, b)`` as an array ``G[a, b]`` over all a, b."""
    return count_N_rows(p, range(p)).T


def count_N_formula_rows(p, bs):
    """``count_N_formula`` for every ``a`` and each ``b`` in ``bs``.

    Same layout as :func:`count_N_rows`.
    """
    p = PrimeModulus(p)
    if p <= 3:
        raise ValueError("count_N_formula_rows needs p > 3")
    n = int(p)
    table = residue_table(p).astype(np.int64)
    y = np.arange(n, dtype=np.int64)
    residues, nonresidues = y[table == 1], y[table == -1]
    a = y
    eps = table
    delta = table[a * (1 - a) % n]
    z_part = np.where(delta * eps == 1, qr_sum(p, 1), qr_sum(p, -1))
    base = n * (n - 1) // 2 - z_part
    out = -np.ones((len(bs), n), dtype=np.int64)
    for j, b in enumerate(bs):
        b = least_nonneg_residue(b, n)
        # sum_{(x/p)=1} {x+b}_p - sum_{(y/p)=-1} {y+b}_p, used when eps = -1
        shift = int(((residues + b) % n).sum() - ((nonresidues + b) % n).sum())
        scaled = (base + np.where(eps == -1, shift, 0))[2:]
        assert not (scaled % n).any(), f"inexact division by p={n} (b={b})"
        out[j, 2:] = scaled // n
    return out


def count_N_formula_grid(p):
    """``count_N_formula`` for all ``a`` and ``b``, as an array ``F[a, b]``."""
    return count_N_formula_rows(p, range(p)).T


def split_S_T(p, values):
    """Sorted distinct ``values[a]`` over residues ``a`` and non-residues ``a``."""
    table = residue_table(p)
    a = np.arange(2, int(p))
    vals = values[2:]
    S = sorted(set(vals[table[a] == 1].tolist()))
    T = sorted(set(vals[table[a] == -1].tolist()))
    return S, T


def compute_S_T(p, b=0, per_a=False):
    """The value sets ``S`` and ``T`` of ``N_p(., b)`` for one ``(p, b)``."""
    p = PrimeModulus(p)
    if p <= 3:
        raise ValueError("compute_S_T needs p > 3")
    b = least_nonneg_residue(b, p)
    values = count_N_table(p, b)
    S, T = split_S_T(p, values)
    rows = None
    if per_a:
        table = residue_table(p)
        rows = [
            (a, int(table[a]), int(table[a * (1 - a) % p]), int(values[a]))
            for a in range(2, p)
        ]
    return ResidueCountReport(p=int(p), b=b, S=S, T=T, per_a=rows)


def closed_form_S(p):
    """Predicted ``S``: ``[(p-1)/4]`` or ``[(p-1-2h)/4, (p-1+2h)/4]``."""
    p = PrimeModulus(p)
    if p <= 3:
        raise ValueError("closed_form_S needs p > 3")
    if p % 4 == 1:
        return [(p - 1) // 4]
    h = class_number_dirichlet(p).h
    lo, r_lo = divmod(p - 1 - 2 * h, 4)
    hi, r_hi = divmod(p - 1 + 2 * h, 4)
    assert r_lo == 0 and r_hi == 0, f"(p-1 +- 2h)/4 not integral for p={p}, h={h}"
    return [lo, hi]


def cardinality_prediction(p):
    """``(3 - (-1/p)) / 2``: 1 for p = 1 (mod 4), 2 for p = 3 (mod 4)."""
    p = PrimeModulus(p)
    if p <= 3:
        raise ValueError("cardinality_prediction needs p > 3")
    return (3 - legendre_euler(-1, p)) // 2


def consecutive_pattern_counts(p):
    """Counts ``(rr, nr, rn)`` of consecutive pairs ``(x, x+1)``, x in [1, p-2].

    ``rr``: both residues; ``nr``: non-residue then residue; ``rn``: residue
    then non-residue.
    """
    p = PrimeModulus(p)
    if p % 4 != 3 or p == 3:
        raise ValueError(f"pattern counts are stated for p = 3 (mod 4), p > 3; got {p}")
    chi = [legendre_euler(x, p) for x in range(p)]
    rr = nr = rn = 0
    for x in range(1, p - 1):
        pair = (chi[x], chi[x + 1])
        if pair == (1, 1):
            rr += 1
        elif pair == (-1, 1):
            nr += 1
        elif pair == (1, -1):
            rn += 1
    return rr, nr, rn


def _check_linear_domain(p, a):
    if a % p in (0, 1):
        raise ValueError(f"need a(1-a) != 0 mod p, got a={a}, p={p}")


def linear_shift_count(p, a, b):
    """``#{x in [0, p-1] : {a x + b}_p > x}``."""
    p = PrimeModulus(p)
    _check_linear_domain(p, a)
    return sum(1 for x in range(p) if (a * x + b) % p > x)


def linear_shift_rows(p, bs, chunk=64):
    """``linear_shift_count`` for every ``a`` and each ``b`` in ``bs``.

    Returns ``L[j, a]`` for ``b = bs[j]``; columns ``a = 0, 1`` hold -1.
    """
    p = PrimeModulus(p)
    n = int(p)
    if n >= 1 << 15:
        raise ValueError("linear_shift_rows needs p < 2**15")
    x = np.arange(n, dtype=np.int64)
    xs = x.astype(np.uint16)
    bs = [np.uint16(least_nonneg_residue(b, n)) for b in bs]
    out = -np.ones((len(bs), n), dtype=np.int64)
    for lo in range(2, n, chunk):
        a = np.arange(lo, min(lo + chunk, n), dtype=np.int64)
        ax = (a[:, None] * x[None, :] % n).astype(np.uint16)
        for j, b in enumerate(bs):
            vals = _wrap(ax + b, n)
            out[j, lo : lo + a.size] = np.count_nonzero(vals > xs, axis=1)
    return out


def linear_shift_table(p):
    """``linear_shift_count`` over all ``a, b`` in ``[0, p)`` as ``L[a, b]``."""
    return linear_shift_rows(p, range(p)).T


def _sun2020_domain(n, a):
    n = int(n)
    if n < 1 or not n & 1:
        raise ValueError(f"n must be a positive odd integer, got {n}")
    if np.gcd(a * (1 - a), n) != 1:
        raise ValueError(f"need gcd(a(1-a), n) = 1, got a={a}, n={n}")
    return n


def sun2020_check(n, a):
    """Both sides of ``(-1)^{#{k <= (n-1)/2 : {ka}_n > k}} = (2a(1-a)/n)``.

    Returns ``(lhs, rhs)``; the identity holds iff they are equal.
    """
    n = _sun2020_domain(n, a)
    c = sum(1 for k in range(1, (n - 1) // 2 + 1) if (k * a) % n > k)
    lhs = -1 if c & 1 else 1
    return lhs, jacobi(2 * a * (1 - a), n)


def sun2020_table(n):
    """Left-hand signs of ``sun2020_check`` for every ``a`` in ``[0, n)``.

    Entries where the gcd condition fails are 0.
    """
    n = _sun2020_domain(n, 2) if n > 1 else 1
    a = np.arange(n, dtype=np.int64)
    k = np.arange(1, (n - 1) // 2 + 1, dtype=np.int64)
    counts = np.count_nonzero((np.outer(a, k) % n) > k[None, :], axis=1)
    signs = np.where(counts & 1, -1, 1)
    valid = np.gcd(a * (1 - a), n) == 1
    return np.where(valid, signs, 0)


def half_range_squares(p):
    """The sequence ``{1^2}_p, {2^2}_p, ..., {((p-1)/2)^2}_p``."""
    p = PrimeModulus(p)
    return [x * x % p for x in range(1, (p - 1) // 2 + 1)]


def count_inversions(seq):
    """Number of pairs ``i < j`` with ``seq[i] > seq[j]`` (merge sort)."""
    seq = list(seq)
    total = 0
    width = 1
    n = len(seq)
    buf = [None] * n
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if seq[i] <= seq[j]:
                    buf[k] = seq[i]
                    i += 1
                else:
                    buf[k] = seq[j]
                    total += mid - i
                    j += 1
                k += 1
            buf[k : k + mid - i] = seq[i:mid]
            k += mid - i
            buf[k : k + hi - j] = seq[j:hi]
        seq, buf = buf, seq
        width *= 2
    return total


def count_inversions_naive(seq):
    seq = list(seq)
    return sum(
        1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
    )


def half_range_inversion_check(p):
    """Inversion parity of the half-range squares against its prediction.

    Returns ``(parity, predicted)``: the prediction is ``+1`` for
    ``p = 3 (mod 8)`` and ``(-1)^((h(-p)+1)/2)`` for ``p = 7 (mod 8)``.
    """
    p = PrimeModulus(p)
    if p % 4 != 3 or p == 3:
        raise ValueError(f"inversion parity is stated for p = 3 (mod 4), p > 3; got {p}")
    parity = -1 if count_inversions(half_range_squares(p)) & 1 else 1
    if p % 8 == 3:
        predicted = 1
    else:
        h = class_number_dirichlet(p).h
        predicted = -1 if (h + 1) // 2 & 1 else 1
    return parity, predicted


def fractional_identity_check(p, a, b, x):
    """Case value of ``{ax^2+b}_p + {(1-a)x^2}_p - {x^2+b}_p``, scaled by p.

    That expression is ``0`` when ``{x^2+b}_p > {ax^2+b}_p`` and ``p``
    otherwise; returns 0 or 1 accordingly after checking it agrees with
    the direct comparison.
    """
    p = PrimeModulus(p)
    if a % p in (0, 1) or x % p == 0:
        raise ValueError(f"need a(1-a) and x nonzero mod p (a={a}, x={x}, p={p})")
    sq = x * x
    val = (a * sq + b) % p + ((1 - a) * sq) % p - (sq + b) % p
    assert val in (0, p), f"identity value {val} not in {{0, {p}}}"
    case = val // p
    direct = 0 if (sq + b) % p > (a * sq + b) % p else 1
    assert case == direct, (p, a, b, x)
    return case
