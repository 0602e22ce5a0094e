"""Shellings of skel_d(Lambda) and the facet-to-monomial bijection.

The recursive construction lists the initial facet ``{y_1, ..., y_d}`` first,
then, for ``k = 1, ..., n - d``, every facet whose largest vertex is
``y_{d+k}``.  Those facets come from a shelling of a smaller complex on
``y_1, ..., y_{d+k-1}`` (a simplex, or a smaller Lambda with a reordered
vertex set) and their monomials pick up one factor of ``x_k``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Sequence

from .complexes import VertexLayout, from_mask, lambda_facets, popcount, to_mask
from .monomials import degree, enumerate_degree

INFINITY = math.inf


@dataclass(frozen=True)
class RestrictionData:
    full: frozenset
    miss: tuple          # ((part index, position), ...) for each full part
    s: float             # a position, or INFINITY
    tail: int
    u_set: int
    r_set: int

    @property
    def size(self) -> int:
        return popcount(self.r_set)


@dataclass(frozen=True)
class Row:
    facet: int
    restriction: RestrictionData
    sigma: tuple | None = None

    @property
    def weight(self) -> int:
        return self.restriction.size


@dataclass(frozen=True)
class ShellingTable:
    layout: VertexLayout
    d: int
    caps: tuple
    rows: tuple

    @property
    def facets(self) -> tuple:
        return tuple(r.facet for r in self.rows)

    @property
    def weights(self) -> tuple:
        return tuple(r.weight for r in self.rows)

    @property
    def sigmas(self) -> tuple:
        return tuple(r.sigma for r in self.rows)

    def __len__(self):
        return len(self.rows)

    def row_of(self, facet: int) -> int:
        for i, r in enumerate(self.rows):
            if r.facet == facet:
                return i
        raise KeyError(facet)


def restriction(layout: VertexLayout, tau: int) -> RestrictionData:
    """The restriction face of ``tau`` computed directly from the vertex order.

    ``full`` lists the parts missing exactly one vertex from ``tau``;
    ``s`` is the first vertex outside ``tau`` that is not one of those
    missing vertices; the restriction is the part of ``tau`` above ``s``
    together with every vertex of a full part lying above that part's
    missing vertex.
    """
    if not layout.is_face(tau):
        raise ValueError(f"{from_mask(tau)} is not a face of the layout")
    full = []
    miss = []
    u_set = 0
    for i, members in enumerate(layout.part_members, start=1):
        absent = [p for p in members if not tau >> (p - 1) & 1]
        if len(absent) == 1:
            full.append(i)
            miss.append((i, absent[0]))
            u_set |= to_mask(p for p in members if p > absent[0])
    excluded = {p for _, p in miss}
    s = INFINITY
    for p in range(1, layout.n + 1):
        if p not in excluded and not tau >> (p - 1) & 1:
            s = p
            break
    tail = 0 if s is INFINITY else tau & ~((1 << s) - 1)
    return RestrictionData(frozenset(full), tuple(miss), s, tail, u_set, tail | u_set)


def revlex_shelling(layout: VertexLayout, d: int) -> ShellingTable:
    """Facets in reverse-lex order, without monomials."""
    rows = tuple(Row(t, restriction(layout, t)) for t in lambda_facets(layout, d))
    return ShellingTable(layout, d, layout.caps(d), rows)


def naive_sigma(table: ShellingTable, caps: Sequence | None = None) -> ShellingTable:
    """Give the j-th facet of weight w the j-th degree-w monomial.

    This is the obvious assignment that fails to make restricted shellings
    behave; it exists to reproduce that failure.
    """
    caps = table.caps if caps is None else tuple(caps)
    used = {}
    rows = []
    for r in table.rows:
        w = r.weight
        pool = enumerate_degree(caps, w)
        j = used.get(w, 0)
        if j >= len(pool):
            raise ValueError(f"more facets of weight {w} than monomials of degree {w}")
        used[w] = j + 1
        rows.append(Row(r.facet, r.restriction, pool[j]))
    return ShellingTable(table.layout, table.d, caps, tuple(rows))


def lift(mask: int, embed: Sequence[int]) -> int:
    """Map a face of a sub-layout to parent positions."""
    out = 0
    for q in from_mask(mask):
        out |= 1 << (embed[q - 1] - 1)
    return out


def sub_layout(layout: VertexLayout, d: int, k: int):
    """The sub-layout whose facets extend by ``y_{d+k}``, with its embedding.

    Returns ``(child, embed)`` where ``embed[q - 1]`` is the parent position
    of child position ``q``, or ``None`` when ``y_{d+k}`` lies in no face.
    """
    n, m = layout.n, layout.m
    v = d + k
    if v <= n - m:
        return VertexLayout((0,) * (v - 1)), tuple(range(1, v))
    i = v - (n - m)
    members = layout.part_members[i - 1]
    if len(members) == 1:
        return None
    moved = max(p for p in members if p != v)
    embed = tuple(p for p in range(1, v) if p != moved) + (moved,)
    # later parts lose their held-back vertex and become free
    part_of = tuple(x if x <= i else 0 for x in (layout.part_of[p - 1] for p in embed))
    return VertexLayout(part_of, allow_singletons=True), embed


@functools.lru_cache(maxsize=None)
def construct(layout: VertexLayout, d: int) -> tuple:
    """``(facet, monomial)`` pairs of the recursive shelling, in order.

    Facets are in ``layout`` positions; monomials have ``n - d`` exponents.
    """
    n = layout.n
    nv = n - d
    if d == 1:
        rows = []
        for p in range(1, n + 1):
            if layout.is_face(1 << (p - 1)):
                sigma = [0] * nv
                if p > 1:
                    sigma[p - 2] = 1
                rows.append((1 << (p - 1), tuple(sigma)))
        return tuple(rows)
    rows = [((1 << d) - 1, (0,) * nv)]
    for k in range(1, nv + 1):
        frame = sub_layout(layout, d, k)
        if frame is None:
            continue
        child, embed = frame
        top = 1 << (d + k - 1)
        for g, mu in construct(child, d - 1):
            sigma = list(mu) + [0] * (nv - len(mu))
            sigma[k - 1] += 1
            rows.append((lift(g, embed) | top, tuple(sigma)))
    return tuple(rows)


@functools.lru_cache(maxsize=256)
def _build_rows(layout: VertexLayout, d: int) -> tuple:
    return tuple(Row(t, restriction(layout, t), mu) for t, mu in construct(layout, d))


def build_shelling_sigma(layout: VertexLayout, d: int) -> ShellingTable:
    """The recursive shelling of skel_d(Lambda) with its monomial bijection.

    Restriction faces are always computed in the layout's own order.
    """
    layout.check_dimension(d)
    # the cache ignores labels, so the table is rebuilt around the caller's layout
    return ShellingTable(layout, d, layout.caps(d), _build_rows(layout, d))


def t_set(table: ShellingTable, i: int) -> frozenset:
    """Facets of the intersection of row ``i`` with all earlier rows.

    Computed from scratch: the maximal members among the pairwise
    intersections with earlier facets.
    """
    facets = table.facets if isinstance(table, ShellingTable) else tuple(table)
    return maximal_intersections(facets[i], facets[:i])


def maximal_intersections(tau: int, earlier: Sequence[int]) -> frozenset:
    inter = {tau & t for t in earlier}
    return frozenset(g for g in inter if not any(g != h and g & h == g for h in inter))


def sigma_degree_histogram(table: ShellingTable) -> tuple:
    top = table.d
    h = [0] * (top + 1)
    for r in table.rows:
        h[degree(r.sigma)] += 1
    return tuple(h)
