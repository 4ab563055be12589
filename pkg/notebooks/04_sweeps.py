"""
Verifying claims over a range of primes
=======================================

``run_verify`` checks every registered claim at each prime and yields one
record per prime in ascending order. The same machinery backs the
``qrverify verify`` command.
"""

from collections import Counter

from qrverify import RunConfig, run_verify
from qrverify.residues import count_inversions, half_range_squares

config = RunConfig(min_p=5, max_p=200)
tally = Counter()
for record in run_verify(config):
    for claim in record["claims"]:
        tally[claim["id"], claim["status"]] += 1

for (claim, status), n in sorted(tally.items()):
    print(f"{claim:<24} {status}: {n}")

# The inversion sequence behind one of the parity claims
seq = half_range_squares(23)
print(seq, "inversions:", count_inversions(seq))
