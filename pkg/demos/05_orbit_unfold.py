"""
The orbit category and unfolding a retract
==========================================

Morphisms in the orbit category are finite families of matrices indexed by
twists; composition is convolution.  A retraction g o f = id in the orbit
category lifts to an honest direct summand of a finite sum of twists.
"""

from fractions import Fraction

from kimura import GradedObject, OrbitMorphism, compose, unfold_summand
from kimura.orbit import orbit_identity, solve_left_inverse

a = GradedObject.of("a")
b = GradedObject.of("b0", "b1")

# f spreads a over two twists
f = OrbitMorphism(a, b, {0: [[1], [0]], 1: [[0], [1]]})
g = OrbitMorphism(b, a, {0: [[Fraction(1, 2), 0]], -1: [[0, Fraction(1, 2)]]})
print("g o f at twist 0:", compose(g, f).component(0).tolist())
print("is the identity:", compose(g, f) == orbit_identity(a))

res = unfold_summand(f, g)
print("N =", res.N, " big matrix size:", len(res.alpha), "x", len(res.alpha[0]))
print("beta o alpha = id:", res.is_summand)

# the same problem solved by exact linear algebra
g2 = solve_left_inverse(f, range(-1, 1))
print("solver found g with support", sorted(g2.support), "->", compose(g2, f) == orbit_identity(a))
