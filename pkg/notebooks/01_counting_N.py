"""
Counting N_p(a, b)
==================

N_p(a, b) counts the x in 1..(p-1)/2 for which {x^2 + b}_p beats
{a x^2 + b}_p. Here we compute it three ways and reproduce the small
tables for p = 5 and p = 7.
"""

from qrverify import compute_S_T, count_N, count_N_formula
from qrverify.residues import count_N_grid

# The comparisons behind N_7(4, 0) = 2
for x in (1, 2, 3):
    lhs, rhs = x * x % 7, 4 * x * x % 7
    print(f"x={x}: {{x^2}}_7={lhs}  {{4x^2}}_7={rhs}  counted={lhs > rhs}")
print("N_7(4,0) =", count_N(7, 4, 0))

# The residue-sum identity gives the same number without enumerating x
print("formula route:", count_N_formula(7, 4, 0))

# The whole (a, b) grid at once; rows 0 and 1 are outside the domain
grid = count_N_grid(7)
print(grid[2:])

# S is fixed, T moves with b
for p in (5, 7):
    print(f"\np = {p}")
    for b in range(p):
        r = compute_S_T(p, b)
        print(f"  b={b}  S={r.S}  T={r.T}")
