"""Acceptance criteria, one test each. All checks are exact (zero tolerance).

Runtime budgets are asserted where one is given; a PASS/FAIL line per
criterion is printed in the pytest terminal summary.
"""

import io
import json
import math
import os
import subprocess
import sys

import numpy as np

from qrverify.arith import primes_in_range
from qrverify.classnum import class_number_dirichlet, class_number_forms_oracle
from qrverify.cli import main
from qrverify.residues import (
    cardinality_prediction,
    closed_form_S,
    consecutive_pattern_counts,
    count_N,
    count_N_formula_grid,
    count_N_grid,
    count_N_table,
    half_range_inversion_check,
    linear_shift_table,
    split_S_T,
    sun2020_check,
)
from qrverify.symbols import jacobi, legendre_euler, legendre_gauss_lemma
from qrverify.verify import RunConfig, run_verify

JOBS = min(8, os.cpu_count() or 1)

# Published S/T tables for p = 5 and p = 7, b = 0..p-1.
GOLDEN_T5 = [[1], [0], [1], [2], [1]]
GOLDEN_T7 = [[0, 1], [1, 2], [2, 3], [1, 2], [2, 3], [1, 2], [0, 1]]


def _table(p):
    out = io.StringIO()
    assert main(["--quiet", "table", str(p), "--format", "json"], out=out) == 0
    return json.loads(out.getvalue())["rows"]


def test_01_example_count(criterion):
    with criterion(1, "N_7(4,0) = 2"):
        assert count_N(7, 4, 0) == 2


def test_02_example_tables(criterion):
    with criterion(2, "golden tables for p = 5 and p = 7"):
        rows5, rows7 = _table(5), _table(7)
        assert [r["b"] for r in rows5] == list(range(5))
        assert [r["T"] for r in rows5] == GOLDEN_T5
        assert all(r["S"] == [1] for r in rows5)
        assert [r["b"] for r in rows7] == list(range(7))
        assert [r["T"] for r in rows7] == GOLDEN_T7
        assert all(r["S"] == [1, 2] for r in rows7)


def test_03_oracle_equivalence(criterion):
    with criterion(3, "brute N = formula N, p <= 300, all a, b", budget_s=60):
        checked = 0
        for p in primes_in_range(5, 300):
            brute, formula = count_N_grid(p), count_N_formula_grid(p)
            mismatch = np.argwhere(brute[2:] != formula[2:])
            assert not mismatch.size, (p, mismatch[0] + [2, 0])
            checked += (p - 2) * p
        assert checked > 10**6


def test_04_theorem(criterion):
    claims = ("thm1.1-cardinality", "thm1.1-S-closed-form", "thm1.1-S-b-invariance")
    with criterion(4, "|S| = |T| and closed-form S, p <= 5000", budget_s=120):
        config = RunConfig(min_p=5, max_p=5000, claims=claims, jobs=JOBS)
        primes = 0
        for record in run_verify(config):
            primes += 1
            assert [c["id"] for c in record["claims"]] == list(claims)
            for c in record["claims"]:
                assert c["status"] == "pass", c
        assert primes == len(primes_in_range(5, 5000)) == 667


def test_05_closed_form_at_scale(criterion):
    with criterion(5, "closed-form S integral to 1e5, equals S to 5000", budget_s=60):
        for p in primes_in_range(5, 10**5):
            S = closed_form_S(p)
            assert len(S) == cardinality_prediction(p)
            assert all(isinstance(v, int) and 0 <= v <= (p - 1) // 2 for v in S)
            if p % 4 == 3:
                h = class_number_dirichlet(p).h
                assert (p - 1 - 2 * h) % 4 == 0 and (p - 1 + 2 * h) % 4 == 0
        for p in primes_in_range(5, 5000):
            S, _ = split_S_T(p, count_N_table(p, 0))
            assert S == closed_form_S(p), p


def test_06_class_numbers(criterion):
    with criterion(6, "Dirichlet h(-p) = forms h(-p), 7 <= p <= 5000", budget_s=30):
        assert class_number_forms_oracle(7) == 1
        assert class_number_forms_oracle(23) == 3
        assert class_number_forms_oracle(163) == 1
        count = 0
        for p in primes_in_range(7, 5000):
            if p % 4 != 3:
                continue
            res = class_number_dirichlet(p)
            assert res.h == class_number_forms_oracle(p), p
            assert res.weighted_sum == -p * res.h
            count += 1
        assert count > 300


def test_07_pattern_counts(criterion):
    with criterion(7, "consecutive residue pattern counts, 7 <= p <= 5000", budget_s=20):
        for p in primes_in_range(7, 5000):
            if p % 4 == 3:
                assert consecutive_pattern_counts(p) == ((p - 3) // 4, (p - 3) // 4, (p + 1) // 4)


def test_08_symbols(criterion):
    with criterion(8, "Euler = Jacobi = Gauss lemma, p <= 2000", budget_s=30):
        for p in primes_in_range(3, 2000):
            for a in range(1, p):
                e = legendre_euler(a, p)
                assert e == jacobi(a, p) == legendre_gauss_lemma(a, p), (a, p)


def test_09_background_identities(criterion):
    with criterion(9, "sun2020 n <= 1001, linear shift p <= 500, inversions p <= 5000",
                   budget_s=60):
        for n in range(1, 1002, 2):
            for a in range(2, max(n, 3)):
                if math.gcd(a * (1 - a), n) != 1:
                    continue
                lhs, rhs = sun2020_check(n, a)
                assert lhs == rhs, (n, a)
        for p in primes_in_range(3, 500):
            assert (linear_shift_table(p)[2:] == (p - 1) // 2).all(), p
        for p in primes_in_range(7, 5000):
            if p % 4 == 3:
                parity, predicted = half_range_inversion_check(p)
                assert parity == predicted, p


def _verify_stdout(jobs):
    cmd = [sys.executable, "-m", "qrverify", "--quiet", "verify",
           "--min-p", "5", "--max-p", "400", "--jobs", str(jobs)]
    proc = subprocess.run(cmd, capture_output=True, check=True)
    return proc.stdout


def test_10_determinism(criterion):
    with criterion(10, "verify output byte-identical across --jobs"):
        one, four = _verify_stdout(1), _verify_stdout(4)
        assert one == four
        assert json.loads(one.splitlines()[-1])["summary"]["failures"] == 0
