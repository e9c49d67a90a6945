"""
Central idempotents in Q[S_n]
=============================

Each partition gives a central idempotent e_lambda in the rational group
algebra.  They are orthogonal and sum to the identity; everything below is
exact.
"""

import time

from kimura import GroupAlgebraElement, enumerate_partitions, verify_idempotent_system, young_idempotent

e = young_idempotent([2, 1])
print("e_[2,1] has", len(e), "terms")
for perm, c in e.items():
    print("  ", perm.images, c)

print("idempotent:", e * e == e)
total = sum((young_idempotent(lam) for lam in enumerate_partitions(3)), GroupAlgebraElement(3, {}))
print("sum over shapes is the identity:", total == GroupAlgebraElement.identity(3))

# full check, one record per pair of shapes
for n in range(1, 7):
    t0 = time.perf_counter()
    report = verify_idempotent_system(n)
    print(f"n={n}: {len(report['checks']):4d} checks, passed={report['passed']}, "
          f"{time.perf_counter() - t0:.2f}s")
