"""Dimensions of the moduli of higher-rank Ulrich bundles built by extensions.

    python3 demos/04_higher_rank.py
"""

from blowup_ulrich.higher_rank import HigherRankError, seed_pair, wildness_table

seed = seed_pair(7, 4)
print(f"seeds on X_7: L1 = {seed.L1}, L0 = {seed.L0}, h = {seed.h}, slope = {seed.mu}")
print(" r  moduli  ext-bound")
for p in wildness_table(7, 4, 8):
    print(f"{p.r:>2} {p.moduli_dim:>7} {p.ext_dim_bound!s:>10}")

# For even m the closed form for h needs n >= m(m+2)/4; below that the pair is
# still Ulrich but h^1(L1 - L0) is smaller, and seed_pair refuses.
try:
    seed_pair(5, 4)
except HigherRankError as exc:
    print("X_5, m = 4:", exc)
