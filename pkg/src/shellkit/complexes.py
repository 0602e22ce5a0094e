"""Vertex layouts of Lambda(l; p_1, ..., p_m), skeleton facets, f- and h-vectors.

Vertices are identified with their positions ``1..n`` in the total order.
Faces are stored as int bitmasks (bit ``p - 1`` for position ``p``), so the
reverse-lex order on faces of equal size is plain integer order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .monomials import UNBOUNDED

FREE = 0


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex positions start at 1, got {v}")
        mask |= 1 << (v - 1)
    return mask


def from_mask(mask: int) -> tuple:
    out = []
    p = 1
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int):
    """Every subset of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class VertexLayout:
    """Part assignment per order position.

    ``part_of[p - 1]`` is 0 for a vertex of the simplex factor and ``i`` for
    a vertex of part ``P_i``.  Parts are numbered so that the last ``m``
    positions hold ``P_1, ..., P_m`` in that order and part sizes are
    non-increasing.  Parts of size 1 (whose single vertex lies in no face)
    only arise inside the recursive construction; pass
    ``allow_singletons=True`` to build one directly.
    """

    part_of: tuple
    labels: tuple = field(default=None, compare=False)
    allow_singletons: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        part_of = tuple(int(x) for x in self.part_of)
        object.__setattr__(self, "part_of", part_of)
        n = len(part_of)
        m = max(part_of, default=0)
        sizes = [0] * m
        for x in part_of:
            if x < 0:
                raise ValueError(f"invalid part index {x}")
            if x:
                sizes[x - 1] += 1
        lo = 1 if self.allow_singletons else 2
        for i, s in enumerate(sizes, start=1):
            if s < lo:
                raise ValueError(f"part P_{i} has size {s}; parts need at least {lo} vertices")
        for i in range(m - 1):
            if sizes[i] < sizes[i + 1]:
                raise ValueError(f"part sizes must be non-increasing, got {sizes}")
        for i in range(1, m + 1):
            if part_of[n - m + i - 1] != i:
                raise ValueError(
                    f"ordering constraint violated: position {n - m + i} must belong to P_{i}"
                )
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_parts(cls, l: int, parts: Sequence[int], order: Sequence[int] | None = None,
                   labels: Sequence | None = None) -> "VertexLayout":
        """Layout for Lambda(l; parts).

        Vertex names are ``1..l`` for the simplex factor followed by one
        consecutive block per part, in the order given.  ``order`` lists the
        vertex names position by position; by default the simplex vertices
        come first, then the parts are interleaved round-robin, with the last
        vertex of each part held back for the final ``m`` positions.
        """
        if l < 0:
            raise ValueError("l must be non-negative")
        parts = [int(p) for p in parts]
        if any(p < 2 for p in parts):
            raise ValueError(f"part sizes must be at least 2, got {parts}")
        name_part = [FREE] * l
        for idx, p in enumerate(parts, start=1):
            name_part += [idx] * p
        n = len(name_part)
        if order is None:
            order = _default_order(l, parts)
        order = [int(v) for v in order]
        if sorted(order) != list(range(1, n + 1)):
            raise ValueError(f"order must be a permutation of 1..{n}")
        raw = [name_part[v - 1] for v in order]
        m = len(parts)
        tail = raw[n - m:]
        if len(set(tail)) != m or FREE in tail:
            raise ValueError("the last m positions must hold one vertex from each part")
        # renumber parts by their position in the tail
        renumber = {old: new for new, old in enumerate(tail, start=1)}
        part_of = tuple(renumber.get(x, FREE) for x in raw)
        return cls(part_of, labels=tuple(labels) if labels is not None else None)

    @property
    def n(self) -> int:
        return len(self.part_of)

    @property
    def m(self) -> int:
        return max(self.part_of, default=0)

    @property
    def l(self) -> int:
        return self.part_of.count(FREE)

    @property
    def parts(self) -> tuple:
        return tuple(self.part_of.count(i) for i in range(1, self.m + 1))

    @property
    def part_members(self) -> tuple:
        """Positions of each part, ascending."""
        members = [[] for _ in range(self.m)]
        for p, x in enumerate(self.part_of, start=1):
            if x:
                members[x - 1].append(p)
        return tuple(tuple(ps) for ps in members)

    @property
    def part_masks(self) -> tuple:
        return tuple(to_mask(ps) for ps in self.part_members)

    def caps(self, d: int) -> tuple:
        """Caps of the monomial set matched with the facets of the d-skeleton."""
        self.check_dimension(d)
        return (UNBOUNDED,) * (self.n - d - self.m) + tuple(p - 1 for p in self.parts)

    def check_dimension(self, d: int) -> None:
        if not 1 <= d <= self.n - self.m:
            raise ValueError(f"d must satisfy 1 <= d <= n - m = {self.n - self.m}, got {d}")

    def is_face(self, mask: int) -> bool:
        if mask >> self.n:
            return False
        return all(mask & pm != pm for pm in self.part_masks)

    def label(self, p: int) -> str:
        return self.labels[p - 1] if self.labels is not None else str(p)

    def format_face(self, mask: int) -> str:
        names = [self.label(p) for p in from_mask(mask)]
        if all(len(x) == 1 for x in names):
            return "".join(names)
        return ",".join(names)


def _default_order(l, parts):
    names = []
    start = l + 1
    for p in parts:
        names.append(list(range(start, start + p)))
        start += p
    order = list(range(1, l + 1))
    body = [block[:-1] for block in names]
    for row in range(max((len(b) for b in body), default=0)):
        for b in body:
            if row < len(b):
                order.append(b[row])
    # the held-back vertices go last, largest parts first
    ranked = sorted(range(len(parts)), key=lambda i: -parts[i])
    order += [names[i][-1] for i in ranked]
    return order


def lambda_facets(layout: VertexLayout, d: int) -> tuple:
    """Facets of the d-skeleton of Lambda, ascending (reverse-lex order)."""
    layout.check_dimension(d)
    out = []
    for combo in combinations(range(1, layout.n + 1), d):
        mask = to_mask(combo)
        if layout.is_face(mask):
            out.append(mask)
    return tuple(sorted(out))


def f_vector(facets: Sequence[int], d: int) -> tuple:
    """``(f_{-1}, f_0, ..., f_{d-1})`` of the complex generated by ``facets``."""
    if not facets:
        return (1,)
    if any(popcount(t) != d for t in facets):
        raise ValueError(f"facets are not all of size {d}")
    faces = set()
    for t in facets:
        faces.update(submasks(t))
    f = [0] * (d + 1)
    for g in faces:
        f[popcount(g)] += 1
    return tuple(f)


def h_from_f(f: Sequence[int], d: int) -> tuple:
    """h-vector from ``f = (f_{-1}, ..., f_{d-1})`` with exact integers."""
    f = list(f) + [0] * (d + 1 - len(f))
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def f_from_h(h: Sequence[int], d: int) -> tuple:
    h = list(h) + [0] * (d + 1 - len(h))
    return tuple(sum(comb(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1))
