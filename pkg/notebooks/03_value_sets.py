"""
The value sets S and T
======================

For every prime p > 3 the set S of values N_p(a, b) over residues a has one
element when p = 1 (mod 4) and two when p = 3 (mod 4), and it does not move
with b. The two values are (p - 1 -+ 2h(-p)) / 4.
"""

from qrverify import closed_form_S, compute_S_T, primes_in_range

for p in primes_in_range(5, 60):
    rows = [compute_S_T(p, b) for b in range(p)]
    S_values = {tuple(r.S) for r in rows}
    T_values = sorted({tuple(r.T) for r in rows})
    print(f"p={p:>2} (mod 4 = {p % 4})  S={rows[0].S}  closed form={closed_form_S(p)}"
          f"  distinct T over b: {len(T_values)}")
    assert S_values == {tuple(closed_form_S(p))}

# Per-a breakdown for one case: (a, (a/p), (a(1-a)/p), N)
report = compute_S_T(23, 5, per_a=True)
for row in report.per_a[:8]:
    print(row)
