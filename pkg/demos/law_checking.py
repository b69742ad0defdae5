"""Randomized checking of the operator algebra's laws.

Every law is checked over seeded random sets, so a run is reproducible and a
failure always comes with a concrete counterexample. The suite covers the
lattice laws (commutativity through involution), the bound characterizations
of union and intersection, complement-containment duality, and the
favorite-operator laws.

Run:  python demos/law_checking.py
"""

from ins import CLI_LAWS, complement, equals, run_law, union, universal_set
from ins.sampling import random_set, rng_from_seed

print("checking every law over 2000 seeded random trials each\n")
for name in CLI_LAWS:
    result = run_law(name, trials=2000, seed=42)
    status = "pass" if result.passed else "FAIL"
    print(f"  {name:24s} {status}   ({result.description})")
    if not result.passed:
        print(result.counterexample)

# The one classical law that deliberately fails: the excluded middle.
# Union with the complement cannot wash out indeterminacy.
print("\nexcluded middle: searching for A with A | ~A != universal set")
rng = rng_from_seed(7)
a = random_set(rng, ("x1", "x2"))
lhs = union(a, complement(a))
print("  witness A  :", "  ".join(str(v) for _, v in a.items()))
print("  A | ~A     :", "  ".join(str(v) for _, v in lhs.items()))
print("  equals universal set?", equals(lhs, universal_set(a.universe)))

# Reproducibility: the same seed gives the identical report object.
first = run_law("demorgan", trials=500, seed=123)
second = run_law("demorgan", trials=500, seed=123)
print("\nsame seed, same report:", first == second)
