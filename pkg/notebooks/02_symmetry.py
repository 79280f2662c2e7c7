"""
Permutation symmetries behind the degeneracy
=============================================

A nonabelian group of permutations commuting with H(lambda) forces
degenerate levels.  For the alternating ring the search finds six
operations: two rotations by 120 degrees, three reflections and the
identity.  Freezing lambda at 1 gives the full hexagon with twelve.
"""

from paramdisc import benzene_huckel, build, find_symmetries, group_closure, symmetry_report
from paramdisc.symmetry import SignedPermutation

H = benzene_huckel()

elems = find_symmetries(H)
for g in elems:
    print(g.one_based(), "order", g.order())

# two generators are enough to rebuild the whole group
rotation = SignedPermutation((4, 5, 0, 1, 2, 3))
reflection = SignedPermutation((1, 0, 5, 4, 3, 2))
group = group_closure([rotation, reflection])
print("closure order:", group.order, "abelian:", group.abelian)
assert set(group.elements) == set(elems)

print("lambda = 1:", len(find_symmetries(H.freeze(1))), "permutations")

rep = symmetry_report(H)
print(rep.note)

# a degeneracy no permutation explains
accidental = build(2, {(1, 1): [0, 1], (2, 2): [0, 1]})
print(symmetry_report(accidental).note)
