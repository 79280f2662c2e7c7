"""
Why the discriminant of a degenerate spectrum is useless
=========================================================

The benzene ring with alternating bonds 1 and lambda has doubly degenerate
levels for every lambda.  Its characteristic polynomial therefore has a
repeated factor, and the discriminant in E is identically zero.  Dividing
out the repeated factor gives a polynomial whose discriminant does locate
the crossings.
"""

from pathlib import Path

from paramdisc import char_poly, degeneracy_profile, discriminant, reduced_char_poly
from paramdisc.document import parse_document

# the same matrix ships as a JSON document next to this script
doc = parse_document((Path(__file__).parent / "benzene.json").read_bytes())
H = doc.to_matrix()

p = char_poly(H)
print("p(E) =", p)
print("Disc_E(p) =", discriminant(p))

# square-free decomposition shows where the zero comes from
for branch in degeneracy_profile(H).branches:
    print(f"  multiplicity {branch.multiplicity}: {branch.factor}")

q = reduced_char_poly(H)
d = discriminant(q)
print("q(E) =", q)
print("Disc_E(q) =", d)

# both elimination routes agree exactly
assert discriminant(q, method="sylvester") == d
