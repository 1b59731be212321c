"""Explicit Ulrich line bundles (d; 2^delta, 1^k, 0^rest) and how many there are.

    python3 demos/02_families.py
"""

from blowup_ulrich.families import boundary_candidates, family_count, theorem_family
from blowup_ulrich.lattice import polarization
from blowup_ulrich.ulrich import verify

for n, m in [(7, 4), (10, 4), (30, 9)]:
    pol = polarization(n, m)
    print(f"X_{n}, m = {m}:")
    for rec in theorem_family(n, m):
        verdict = verify(rec.cls, pol)
        print(f"  d={rec.d:<3} {str(rec.cls):<22} {rec.orbit_size:>14} permutations  {verdict.label}")
    for rec in boundary_candidates(n, m):
        print(f"  boundary k = 0: {rec.cls}  {verify(rec.cls, pol).label}")

# Along perfect squares the number of family shapes keeps growing.
print("n      m   shapes")
for k in (3, 5, 10, 20, 40, 60):
    m, count = family_count(k * k)
    print(f"{k * k:<6} {m:<3} {count}")
