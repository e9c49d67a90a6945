"""
Partitions and characters of the symmetric group
================================================

Irreducible representations of S_n are indexed by partitions of n.  This
walk-through lists them, checks the sum-of-squares identity and prints a
small character table.
"""

from math import factorial

from kimura import character, conjugate, enumerate_partitions, irrep_dimension

n = 4
shapes = enumerate_partitions(n)
print("partitions of", n, ":", ", ".join(str(lam) for lam in shapes))

# dimensions from the hook length formula
dims = {str(lam): irrep_dimension(lam) for lam in shapes}
print("dimensions:", dims)
print("sum of squares", sum(d * d for d in dims.values()), "== n! =", factorial(n))

# rows are irreps, columns are cycle types
print()
print("character table of S_4")
print(" " * 10 + "".join(f"{str(mu):>10}" for mu in shapes))
for lam in shapes:
    print(f"{str(lam):>10}" + "".join(f"{character(lam, mu):>10}" for mu in shapes))

# tensoring with the sign flips the shape
lam = shapes[1]
print()
print("conjugate of", lam, "is", conjugate(lam))
