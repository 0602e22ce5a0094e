"""Every compressed multicomplex gives a shellable subcomplex.

Walk over all F-vectors realizable in S(caps) for a small layout, build the
subcomplex and confirm it is shellable with h = F.
"""

import collections

from shellkit.complexes import VertexLayout
from shellkit.monomials import compress
from shellkit.realization import count_compressed, extract, iter_compressed_f_vectors
from shellkit.verify import verify_shelling

layout = VertexLayout.from_parts(1, [3, 2])
d = 3
caps = layout.caps(d)
print("caps:", caps, "compressed multicomplexes:", count_compressed(caps, d))

sizes = collections.Counter()
for F in iter_compressed_f_vectors(caps, d):
    result = extract(layout, d, compress(F, caps))
    assert result.h == F and verify_shelling(result.facets, d).passed
    sizes[len(result.facets)] += 1

for k in sorted(sizes):
    print(f"{k:2d} facets: {sizes[k]} subcomplexes")
