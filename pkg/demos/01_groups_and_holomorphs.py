#!/usr/bin/env python3
"""Walk through the basic objects: group catalogues, automorphisms,
holomorphs, and the regular action.

A group N of order n acts on itself by left translation; the holomorph is
the normalizer of that regular copy inside the symmetric group on the n
elements, and splits as N extended by Aut(N).  Everything downstream
(transitive subgroups, Hopf-Galois types) happens inside these holomorphs.
"""

from hopfgalois import automorphism_group, groups_of_order, holomorph, regular_representation

print("Groups of order 8:")
for N in groups_of_order(8).groups:
    aut = automorphism_group(N)
    hol = holomorph(N)
    print(f"  {N.label:6s} {N.tag:12s} |Aut| = {aut.order():4d}  |Hol| = {hol.group.order():5d}")

print()
print("The holomorph acts on the 8 points of N itself:")
N = groups_of_order(8).by_label("8.1")
hol = holomorph(N)
print(f"  type {N.tag}: transitive = {hol.group.is_transitive()}, "
      f"point stabilizer = Aut(N) of order {hol.group.point_stabilizer(0).order()}")

print()
print("Regular representation of the nonabelian group of order 21:")
m = groups_of_order(21).groups[1]
reg = regular_representation(m)
print(f"  {m.tag}: order {reg.order()}, transitive = {reg.is_transitive()}, "
      f"stabilizer trivial = {reg.point_stabilizer(0).is_trivial()}")

print()
print("Squarefree orders come from metacyclic presentations; counts for a few:")
for n in [15, 21, 30, 42, 105]:
    print(f"  order {n:4d}: {len(groups_of_order(n).groups)} isomorphism classes")
