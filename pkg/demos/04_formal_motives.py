"""
Formal motives and Kimura dimension
===================================

Motives here are formal sums of a few atoms.  A curve of genus g has
super-dimension (2|2g), a finite set of m points has (m|0), and Tate
twists never change the dimension.
"""

from kimura import FormalMotive, euler_char, kim, tate_twist
from kimura.motives import curve, points, unit

for g in range(4):
    M = FormalMotive.of(curve(g))
    print(f"genus {g}: kim = {kim(M).kim}, euler = {euler_char(M)}")

M = FormalMotive.of(curve(1), (points(3), 2), unit(1))
print()
print("M =", M)
print("kim(M) =", kim(M).kim, " euler(M) =", euler_char(M))
print("M(2) =", tate_twist(M, 2), " kim =", kim(tate_twist(M, 2)).kim)

# round trip through JSON
text = M.dumps()
print(text)
print("round trip ok:", FormalMotive.from_json(text) == M)
