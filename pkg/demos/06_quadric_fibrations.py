"""
Quadric fibrations over a curve
===============================

A quadric fibration of relative dimension d - 2 over a curve C, with
discriminant D, has Kimura dimension given by a closed formula depending on
the parity of d.  The library also writes down the decompositions that
produce it.
"""

from kimura import FibrationSpec, kim_fibration, motivic_decomposition, nc_decompose, riemann_hurwitz_cover_genus
from kimura.fibration import HypothesisError, root_stack_decompose
from kimura.motives import FormalMotive, curve, points

odd = FibrationSpec(d=3, genus=0, crit_count=6, algebraically_closed=True, char_not_2=True)
r = kim_fibration(odd)
print("conic bundle over P^1, 6 singular fibres:", r.kim, " via", r.formula)
print("  noncommutative pieces:", nc_decompose(odd).summands)

cover = riemann_hurwitz_cover_genus(0, 6)
even = FibrationSpec(d=4, genus=0, crit_count=6, cover_genus=cover)
r = kim_fibration(even)
print("quadric surface bundle, double cover of genus", cover, ":", r.kim, " via", r.formula)

# an explicit motive for odd d
spec = FibrationSpec(d=5, genus=1, crit_count=4, algebraically_closed=True, char_not_2=True, projective=True)
dec = motivic_decomposition(spec)
print("d=5 over an elliptic curve:", dec.summands, " kim =", dec.kim())

try:
    kim_fibration(FibrationSpec(d=3, genus=0, crit_count=6))
except HypothesisError as exc:
    print("refused:", exc.hypothesis, "-", exc)

X, D = FormalMotive.of(curve(1)), FormalMotive.of(points(2))
for r in range(1, 4):
    print("root stack r =", r, ":", root_stack_decompose(r, X, D).summands)
