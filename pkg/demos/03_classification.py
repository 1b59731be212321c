"""Searching all classes that pass the numerical Ulrich conditions.

    python3 demos/03_classification.py
"""

from blowup_ulrich.classify import auto_d_max, classify
from blowup_ulrich.lattice import polarization

for n in (7, 10):
    pol = polarization(n, 4)
    d_max, rule = auto_d_max(pol)
    report = classify(n, pol)
    print(f"X_{n}: degrees up to {d_max} ({rule})")
    print("  Ulrich:     ", ", ".join(report.ulrich_strings()))
    print("  near misses:", ", ".join(f"{c} fails ({f})" for c, f in report.near_misses))
    for c, why in report.whitelisted:
        print(f"  {c} is accepted on geometric grounds: {why}")

# On the cubic surface one twisted-cubic class stays Undecided: the smoothness
# rules do not reach (5;2^6), and the search says so instead of guessing.
report = classify(6, polarization(6, 3))
print("X_6, m = 3 undecided:", [(str(c), why) for c, why in report.undecided])
