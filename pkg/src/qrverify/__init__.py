"""Exact computations with quadratic residues modulo primes.

Counts ``N_p(a, b)``, the value sets ``S`` and ``T``, class numbers
``h(-p)`` and the related residue identities, each by a brute-force route
and a closed-form route so that one can check the other.
"""

from .arith import PrimeModulus, is_prime, least_nonneg_residue, mod_pow, primes_in_range
from .classnum import (
    ClassNumberResult,
    class_number_dirichlet,
    class_number_forms_oracle,
    qr_sum,
)
from .residues import (
    CountSpec,
    ResidueCountReport,
    cardinality_prediction,
    closed_form_S,
    compute_S_T,
    consecutive_pattern_counts,
    count_N,
    count_N_formula,
    fractional_identity_check,
    half_range_inversion_check,
    linear_shift_count,
    sun2020_check,
)
from .symbols import jacobi, legendre_euler, legendre_gauss_lemma
from .verify import BPolicy, RunConfig, run_verify, verify_prime

__version__ = "0.1.0"
