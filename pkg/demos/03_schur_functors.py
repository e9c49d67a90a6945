"""
Schur functors on super-objects
===============================

An object of super-dimension (p|q) behaves like p even and q odd basis
vectors.  S_lambda of it is counted by hook tableaux; it vanishes exactly
when lambda contains the cell (p+1, q+1).
"""

from kimura import SuperDim, kim_stats, power_dims, schur_dims, schur_sdim_character
from kimura.schur import hook_tableaux

a = SuperDim(1, 1)
print("tableaux of shape [2] with letters 1 | 1':", list(hook_tableaux([2], 1, 1)))
print("S_[2](1|1) =", schur_dims([2], a))
print("S_[2,2](1|1) =", schur_dims([2, 2], a), "(the cell (2,2) does not fit)")

# the even minus odd part agrees with a character computation
for lam in ([3], [2, 1], [1, 1, 1]):
    d = schur_dims(lam, SuperDim(2, 1))
    print(lam, d, "super-trace:", schur_sdim_character(lam, SuperDim(2, 1)))

print()
print("exterior powers of (3|0):", [str(power_dims("wedge", k, SuperDim(3, 0))) for k in range(6)])
print("symmetric powers of (0|2):", [str(power_dims("sym", k, SuperDim(0, 2))) for k in range(5)])

print()
print("kim statistics for (4|2):", kim_stats(SuperDim(4, 2)).as_dict())
