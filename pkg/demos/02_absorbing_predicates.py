"""Checking absorbing-type conditions, with minimal witnesses.

Run: python3 demos/02_absorbing_predicates.py
"""

from absorb import (
    find_I_tuple,
    ideal,
    is_n_absorbing,
    is_n_absorbing_I_primary,
    is_n_absorbing_I_primary_colon,
    is_n_absorbing_primary,
    is_primary,
    ring,
    unit_ideal,
    zero_ideal,
)

R = ring("Z/12")

# (6) is not primary: 2*3 lands in it but neither factor is in (6) or its radical.
v = is_primary(ideal(R, "6"))
print(v.predicate, v.holds, v.witness, v.clauses)

# Relative to I = (2) the product 6 sits outside IP = (0), so the witness survives.
v = is_n_absorbing_I_primary(ideal(R, "6"), ideal(R, "2"), 1)
print("1-absorbing (2)-primary:", v.holds, v.witness)
print("  same verdict from the colon form:", is_n_absorbing_I_primary_colon(ideal(R, "6"), ideal(R, "2"), 1).holds)

# Relative to the whole ring nothing is left to check.
print("relative to R:", is_n_absorbing_I_primary(ideal(R, "6"), unit_ideal(R), 1).holds)

# Squarefree moduli give the classic triple (2, 3, 5).
Z30 = ring("Z/30")
print("(0) 2-absorbing in Z/30:", is_n_absorbing(zero_ideal(Z30), 2).witness)
print("(0) 2-absorbing primary:", is_n_absorbing_primary(zero_ideal(Z30), 2).witness)
print("I-tuple for I = R:", find_I_tuple(zero_ideal(Z30), unit_ideal(Z30), 2))

# Growing n only makes the condition easier to satisfy.
for n in (1, 2, 3):
    print(f"n={n}:", is_n_absorbing_primary(zero_ideal(Z30), n).holds)
