"""Restriction faces on a bigger layout.

Lambda(1; 5, 4, 3) has 13 vertices.  For one facet of the 8-skeleton we
print the pieces the restriction face is built from.
"""

from shellkit.complexes import VertexLayout, from_mask, to_mask
from shellkit.shelling import restriction

layout = VertexLayout.from_parts(1, [5, 4, 3])
for i, members in enumerate(layout.part_members, 1):
    print(f"P{i}:", members)

tau = to_mask([1, 2, 4, 5, 6, 9, 11, 12])
rd = restriction(layout, tau)
print("full parts:", sorted(rd.full))
print("missing vertex:", dict(rd.miss))
print("s:", rd.s)
print("U:", from_mask(rd.u_set))
print("R:", from_mask(rd.r_set))
