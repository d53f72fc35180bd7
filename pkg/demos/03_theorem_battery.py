"""Run the structural checks over the default ring battery.

Run: python3 demos/03_theorem_battery.py
"""

from absorb import verify as V

print("battery:", ", ".join(V.DEFAULT_BATTERY))
print()
for name, fn in V.THEOREMS.items():
    rep = fn("default")
    line = f"{name:>5}: {rep.instances:5d} instances, {rep.hypothesis_hits:5d} hits, {rep.skipped:4d} skipped"
    print(line, "  failures:", rep.failure_counts or "none")

# The exponent-base ambiguity: with I^m some instances fail, with P^m none do.
rep = V.verify_thm_2_11("default")
rec = rep.failures[0]
print()
print("sample finding:", rec.ring, rec.params["ideals"], "tuple", rec.params["tuple"], "->", rec.conclusion)
print("re-validated from scratch:", V.revalidate(rec))

# Dropping a hypothesis shows it is needed.
loose = V.counterexample_search("2.12", "P_not_absorbing_primary")
print("without 'P not n-absorbing primary':", loose.failure_counts)
