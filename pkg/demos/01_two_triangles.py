"""Shelling the 3-dimensional skeleton of the join of two triangle boundaries.

The reverse-lex order of facets is already a shelling, but handing out
monomials along it does not respect divisibility.  The recursive order
fixes that, and the difference shows up as soon as we cut the table down
to a multicomplex.
"""

from shellkit import io
from shellkit.complexes import VertexLayout
from shellkit.realization import extract, restrict_table
from shellkit.shelling import build_shelling_sigma, naive_sigma, revlex_shelling

layout = VertexLayout.from_parts(0, [3, 3])
print(layout.part_members)  # vertices 1,3,5 and 2,4,6

# %% reverse-lex order with monomials assigned greedily
naive = naive_sigma(revlex_shelling(layout, 4))
print(io.render_table(naive))

# %% the recursive order
table = build_shelling_sigma(layout, 4)
print(io.render_table(table))

# %% keep the rows whose monomial lies in M = {1, x1, x2, x1^2, x1x2, x1^2x2}
M = {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1)}
print("naive h:", restrict_table(naive, M).h)      # (1, 2, 3, 0, 0)
print("recursive h:", extract(layout, 4, M).h)      # (1, 2, 2, 1, 0)
