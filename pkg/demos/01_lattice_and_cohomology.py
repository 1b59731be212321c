"""Divisor classes on X_n and what the cohomology ladder can and cannot say.

    python3 demos/01_lattice_and_cohomology.py
"""

from blowup_ulrich.cohomology import cohomology
from blowup_ulrich.interpolation import h0_interpolation
from blowup_ulrich.lattice import arithmetic_genus, canonical_class, chi, intersect, parse_class, polarization

# A class is a degree plus point multiplicities; text uses exponential notation.
c = parse_class("(6;2^6,1)")
k = canonical_class(7)
print(f"C = {c} on X_7: C^2 = {intersect(c, c)}, C.K = {intersect(c, k)}, "
      f"chi = {chi(c)}, p_a = {arithmetic_genus(c)}")

# Quartics through 7 points: very ample by the general bound (49 >= 44).
pol = polarization(7, 4)
print(f"{pol}: very ample={pol.very_ample} via {pol.criterion_used.value}, degree {pol.degree}")

# The ladder decides h0 only where a theorem applies and says so.
for text in ("(4;2,1^3,0^3)", "(3;1^2,-1,0)", "(4;2^5)", "(2;2,2)"):
    rep = cohomology(parse_class(text))
    print(f"{text:<16} h0={rep.h0!s:<5} h1={rep.h1!s:<5} via {rep.rules['h0']}")

# The two classical special systems: the ladder refuses, interpolation finds a curve.
for text in ("(2;2,2)", "(4;2^5)"):
    print(f"{text}: interpolation over GF(2^31-1) gives h0 = {h0_interpolation(parse_class(text), seed=1)}")
