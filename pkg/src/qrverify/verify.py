"""Per-prime claim verification and ordered range sweeps.

Each claim pits a brute-force enumeration against a closed form (or two
independent algorithms against each other) for a single prime and yields
``pass`` or ``fail`` with a counterexample payload.
"""

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .arith import PrimeModulus, primes_in_range
from .classnum import class_number_dirichlet, class_number_forms_oracle
from .residues import (
    cardinality_prediction,
    closed_form_S,
    consecutive_pattern_counts,
    count_N_formula_rows,
    count_N_rows,
    count_inversions,
    half_range_inversion_check,
    half_range_squares,
    linear_shift_rows,
    split_S_T,
    sun2020_table,
)
from .symbols import jacobi, legendre_euler, legendre_gauss_lemma

__all__ = [
    "SCHEMA",
    "CLAIMS",
    "DEFAULT_SEED",
    "BPolicy",
    "RunConfig",
    "b_values",
    "verify_prime",
    "run_verify",
]

SCHEMA = "qr-verify/1"
DEFAULT_SEED = 20180000
EXHAUSTIVE_B_LIMIT = 300

CLAIMS = (
    "thm1.1-cardinality",
    "thm1.1-S-closed-form",
    "thm1.1-S-b-invariance",
    "lemma2.1",
    "lemma2.2-counts",
    "oracle-N-equivalence",
    "sun2020",
    "sun2019-linear",
    "sun2019-inversions",
    "symbols-threeway",
)

# claims stated only for p = 3 (mod 4); omitted from records otherwise
_MOD4_THREE_ONLY = {"lemma2.1", "lemma2.2-counts", "sun2019-inversions"}


@dataclass(frozen=True)
class BPolicy:
    """Which shifts ``b`` to test at each prime.

    ``kind`` is ``auto`` (all b up to p = 300, else a sample of 8),
    ``all``, ``sample`` (``k`` random values) or ``list`` (``values``).
    Samples always include the edge shifts 0, 1 and p - 1.
    """

    kind: str = "auto"
    k: int = 8
    values: tuple = ()

    @classmethod
    def parse(cls, text):
        """Parse ``all``, ``auto``, ``sample:K`` or ``list:v1,v2,...``."""
        if text in ("all", "auto"):
            return cls(kind=text)
        head, _, rest = text.partition(":")
        if head == "sample" and rest:
            k = int(rest)
            if k < 0:
                raise ValueError("sample size must be nonnegative")
            return cls(kind="sample", k=k)
        if head == "list" and rest:
            return cls(kind="list", values=tuple(int(v) for v in rest.split(",")))
        raise ValueError(f"bad b policy {text!r}")

    def __str__(self):
        if self.kind == "sample":
            return f"sample:{self.k}"
        if self.kind == "list":
            return "list:" + ",".join(map(str, self.values))
        return self.kind


@dataclass(frozen=True)
class RunConfig:
    min_p: int
    max_p: int
    b_policy: BPolicy = field(default_factory=BPolicy)
    seed: int = DEFAULT_SEED
    jobs: int = 1
    claims: tuple = CLAIMS
    timing: bool = False

    def validate(self):
        if self.min_p < 5 or self.min_p > self.max_p:
            raise ValueError(f"need 5 <= min_p <= max_p, got {self.min_p}..{self.max_p}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        unknown = set(self.claims) - set(CLAIMS)
        if unknown:
            raise ValueError(f"unknown claims: {', '.join(sorted(unknown))}")


def b_values(p, policy, seed=DEFAULT_SEED):
    """Sorted distinct shifts in ``[0, p)`` selected by ``policy`` at ``p``.

    Random samples are drawn with ``random.Random(seed + p)``.
    """
    p = int(p)
    kind = policy.kind
    if kind == "auto":
        kind = "all" if p <= EXHAUSTIVE_B_LIMIT else "sample"
    if kind == "all":
        return list(range(p))
    if kind == "list":
        return sorted({v % p for v in policy.values})
    rng = random.Random(seed + p)
    picked = set(rng.sample(range(p), min(policy.k, p)))
    return sorted(picked | {0, 1, p - 1})


def _fail(**detail):
    return {k: (v.tolist() if isinstance(v, np.ndarray) else v) for k, v in detail.items()}


class _PrimeContext:
    """Lazily shared intermediate results for the claims at one prime."""

    def __init__(self, p, bs):
        self.p = p
        self.bs = bs
        self._brute = None
        self._sets = None

    @property
    def brute(self):
        if self._brute is None:
            self._brute = count_N_rows(self.p, self.bs)
        return self._brute

    @property
    def sets(self):
        if self._sets is None:
            self._sets = [split_S_T(self.p, row) for row in self.brute]
        return self._sets


def _thm_cardinality(ctx):
    want = cardinality_prediction(ctx.p)
    for b, (S, T) in zip(ctx.bs, ctx.sets):
        if len(S) != want or len(T) != want:
            return _fail(b=b, expected=want, actual=[len(S), len(T)], S=S, T=T)
    return None


def _thm_closed_form(ctx):
    want = closed_form_S(ctx.p)
    for b, (S, _) in zip(ctx.bs, ctx.sets):
        if S != want:
            return _fail(b=b, expected=want, actual=S)
    return None


def _thm_b_invariance(ctx):
    first_b, (first, _) = ctx.bs[0], ctx.sets[0]
    for b, (S, _) in zip(ctx.bs, ctx.sets):
        if S != first:
            return _fail(b=b, expected=first, actual=S, reference_b=first_b)
    return None


def _lemma21(ctx):
    res = class_number_dirichlet(ctx.p)
    forms = class_number_forms_oracle(ctx.p)
    if res.h != forms or res.weighted_sum != -ctx.p * forms:
        return _fail(expected=forms, actual=res.h, weighted_sum=res.weighted_sum)
    return None


def _lemma22(ctx):
    p = ctx.p
    want = ((p - 3) // 4, (p - 3) // 4, (p + 1) // 4)
    got = consecutive_pattern_counts(p)
    if got != want:
        return _fail(expected=list(want), actual=list(got))
    return None


def _oracle_equivalence(ctx):
    formula = count_N_formula_rows(ctx.p, ctx.bs)
    bad = np.argwhere(formula[:, 2:] != ctx.brute[:, 2:])
    if bad.size:
        j, i = bad[0]
        a = int(i) + 2
        return _fail(
            a=a, b=ctx.bs[j], expected=int(ctx.brute[j, a]), actual=int(formula[j, a])
        )
    return None


def _sun2020(ctx):
    p = ctx.p
    lhs = sun2020_table(p)
    for a in range(2, p):
        rhs = jacobi(2 * a * (1 - a), p)
        if lhs[a] != rhs:
            return _fail(a=a, expected=rhs, actual=int(lhs[a]))
    return None


def _sun2019_linear(ctx):
    p = ctx.p
    counts = linear_shift_rows(p, ctx.bs)
    bad = np.argwhere(counts[:, 2:] != (p - 1) // 2)
    if bad.size:
        j, i = bad[0]
        a = int(i) + 2
        return _fail(a=a, b=ctx.bs[j], expected=(p - 1) // 2, actual=int(counts[j, a]))
    return None


def _sun2019_inversions(ctx):
    parity, predicted = half_range_inversion_check(ctx.p)
    if parity != predicted:
        inv = count_inversions(half_range_squares(ctx.p))
        return _fail(expected=predicted, actual=parity, inversions=inv)
    return None


def _symbols_threeway(ctx):
    p = ctx.p
    for a in range(1, p):
        e = legendre_euler(a, p)
        j = jacobi(a, p)
        g = legendre_gauss_lemma(a, p)
        if not e == j == g:
            return _fail(a=a, expected=e, actual=[j, g])
    return None


_CHECKS = {
    "thm1.1-cardinality": _thm_cardinality,
    "thm1.1-S-closed-form": _thm_closed_form,
    "thm1.1-S-b-invariance": _thm_b_invariance,
    "lemma2.1": _lemma21,
    "lemma2.2-counts": _lemma22,
    "oracle-N-equivalence": _oracle_equivalence,
    "sun2020": _sun2020,
    "sun2019-linear": _sun2019_linear,
    "sun2019-inversions": _sun2019_inversions,
    "symbols-threeway": _symbols_threeway,
}


def verify_prime(p, claims=CLAIMS, b_policy=BPolicy(), seed=DEFAULT_SEED, timing=False):
    """Evaluate ``claims`` at one prime ``p > 3`` and return a record dict.

    Claims outside their domain at ``p`` are left out of the record. A
    failing claim carries a ``detail`` payload with the inputs that
    reproduce it (``a``, ``b``, ``expected``, ``actual`` as applicable).
    """
    start = time.perf_counter()
    p = PrimeModulus(p)
    if p <= 3:
        raise ValueError("verification needs p > 3")
    ctx = _PrimeContext(p, b_values(p, b_policy, seed))
    results = []
    for claim in CLAIMS:
        if claim not in claims:
            continue
        if claim in _MOD4_THREE_ONLY and p % 4 != 3:
            continue
        detail = _CHECKS[claim](ctx)
        entry = {"id": claim, "status": "pass" if detail is None else "fail"}
        if detail is not None:
            entry["detail"] = {"p": int(p), **detail}
        results.append(entry)
    elapsed = round((time.perf_counter() - start) * 1000, 3) if timing else None
    return {"schema": SCHEMA, "p": int(p), "claims": results, "elapsed_ms": elapsed}


def _verify_star(args):
    return verify_prime(*args)


def run_verify(config):
    """Yield one record per prime in ``[min_p, max_p]``, ascending.

    With ``jobs > 1`` primes are farmed out to a process pool; output order
    does not depend on completion order.
    """
    config.validate()
    primes = [int(p) for p in primes_in_range(config.min_p, config.max_p)]
    tasks = [
        (p, tuple(config.claims), config.b_policy, config.seed, config.timing)
        for p in primes
    ]
    if config.jobs == 1 or len(tasks) <= 1:
        yield from map(_verify_star, tasks)
        return
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        yield from pool.map(_verify_star, tasks, chunksize=1)
