"""
Class numbers two ways
======================

For primes p = 3 (mod 4) the weighted residue sum sum z (z/p) equals
-p h(-p). We compare it with a direct count of reduced quadratic forms.
"""

from qrverify import class_number_dirichlet, primes_in_range
from qrverify.classnum import reduced_forms

print(f"{'p':>5} {'sum z(z/p)':>11} {'h':>3}  forms")
for p in primes_in_range(7, 200):
    if p % 4 != 3:
        continue
    res = class_number_dirichlet(p)
    forms = reduced_forms(p)
    assert len(forms) == res.h
    print(f"{p:>5} {res.weighted_sum:>11} {res.h:>3}  {forms}")

# h(-163) = 1: a single reduced form
print(reduced_forms(163))
