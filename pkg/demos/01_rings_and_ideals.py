"""Finite rings and their ideal lattices.

Run: python3 demos/01_rings_and_ideals.py
"""

import numpy as np

from absorb import enumerate_ideals, ideal, ideal_product, quotient_ring, radical, ring

# Rings are built from a short spec; elements are the indices 0..size-1.
R = ring("Z/12")
S = ring("Z/4 x Z/9")
F = ring("Z/2[x]/(x^2+x+1)")
for T in (R, S, F):
    print(f"{T.label:>20}: {T.size} elements, {len(T.units())} units")

# Small rings carry full operation tables, so whole-array arithmetic is cheap.
a = np.arange(R.size)
print("squares in Z/12:", sorted(set(R.mul(a, a).tolist())))

# The ideal lattice, smallest first, with radicals alongside.
for P in enumerate_ideals(R):
    print(f"  ({', '.join(P.text())}) size {len(P):2d}   rad = ({', '.join(radical(P).text())})")

# Ideal arithmetic on generator literals.
P, I = ideal(R, "2"), ideal(R, "3")
print("(2)(3) =", ideal_product(P, I).text())

# Quotients are rings in their own right; cosets print as [rep].
Q, proj = quotient_ring(R, ideal(R, "4"))
print(Q.label, "has", Q.size, "elements; 7 maps to", Q.render(proj[7]))

# Product rings and polynomial quotients have richer lattices.
print("Z/4 x Z/9 has", len(enumerate_ideals(S)), "ideals")
print("Z/3[x]/(x^2) ideals:", [P.text() for P in enumerate_ideals(ring("Z/3[x]/(x^2)"))])
