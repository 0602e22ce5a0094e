"""Shellable subcomplexes of Lambda with a prescribed h-vector.

Given a compressed multicomplex ``M`` inside the degree <= d part of
S(caps), keep the rows of the recursive shelling whose monomial lies in
``M``.  The kept rows are again a shelling, with the same T-sets as in the
full table, so the h-vector of the subcomplex is the F-vector of ``M``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import VertexLayout, f_vector, from_mask, h_from_f
from .monomials import (
    UnrealizableError,
    compress,
    enumerate_degree,
    f_vector_of,
    first_closure_failure,
    in_caps,
    is_compressed,
    is_multicomplex,
)
from .shelling import ShellingTable, build_shelling_sigma, maximal_intersections
from .verify import VerificationReport


class RealizationError(RuntimeError):
    """The extracted subcomplex does not have the expected h-vector."""


@dataclass(frozen=True)
class RealizationResult:
    full_table: ShellingTable
    rows: tuple
    multicomplex: frozenset
    facets: tuple
    f: tuple
    h: tuple

    @property
    def layout(self) -> VertexLayout:
        return self.full_table.layout

    @property
    def d(self) -> int:
        return self.full_table.d

    @property
    def sub_table(self) -> ShellingTable:
        t = self.full_table
        return ShellingTable(t.layout, t.d, t.caps, self.rows)


def _pad(seq, length):
    seq = tuple(seq)
    return seq + (0,) * (length - len(seq))


def restrict_table(table: ShellingTable, members: Iterable[Sequence[int]]) -> RealizationResult:
    """Rows whose monomial lies in ``members``, in table order.  No checks."""
    members = frozenset(tuple(mu) for mu in members)
    rows = tuple(r for r in table.rows if r.sigma in members)
    facets = tuple(r.facet for r in rows)
    f = _pad(f_vector(facets, table.d), table.d + 1)
    return RealizationResult(table, rows, members, facets, f, h_from_f(f, table.d))


def extract(layout: VertexLayout, d: int, members: Iterable[Sequence[int]]) -> RealizationResult:
    """Shellable subcomplex whose h-vector is the F-vector of ``members``.

    ``members`` must be a multicomplex inside the degree <= d part of
    S(caps) whose degree slices are reverse-lex initial segments; use
    :func:`realize_h_vector` to start from an F-vector instead.
    """
    caps = layout.caps(d)
    members = frozenset(tuple(mu) for mu in members)
    for mu in members:
        if not in_caps(mu, caps):
            raise ValueError(f"monomial {list(mu)} is not in S{_caps_str(caps)}")
        if sum(mu) > d:
            raise ValueError(f"monomial {list(mu)} has degree above d = {d}")
    if not is_multicomplex(members, caps):
        raise ValueError("members are not closed under divisibility")
    if not is_compressed(members, caps):
        raise ValueError("multicomplex is not compressed; compress its F-vector first")
    result = restrict_table(build_shelling_sigma(layout, d), members)
    expected = _pad(f_vector_of(members), d + 1)
    if result.h != expected:
        raise RealizationError(f"h-vector {result.h} differs from F-vector {expected}")
    return result


def realize_h_vector(layout: VertexLayout, d: int, F: Sequence[int]) -> RealizationResult:
    F = tuple(int(x) for x in F)
    if len(F) > d + 1:
        raise ValueError(f"F has length {len(F)} > d + 1 = {d + 1}")
    caps = layout.caps(d)
    bad = first_closure_failure(F, caps)
    if bad is not None:
        raise UnrealizableError(f"F = {list(F)} is not the F-vector of a multicomplex "
                                f"in S{_caps_str(caps)}: fails at degree {bad}", bad)
    return extract(layout, d, compress(F, caps))


def _caps_str(caps):
    return "(" + ",".join("inf" if not isinstance(a, int) else str(a) for a in caps) + ")"


def witness_check(result: RealizationResult) -> VerificationReport:
    """Recheck a realization from scratch.

    The subcomplex is rebuilt from the kept rows; its f- and h-vectors are
    recomputed, compared with the stored ones, with the restriction-size
    histogram and with the F-vector of the multicomplex; and the T-sets
    within the kept rows are compared with those in the full table.
    """
    table = result.full_table
    d = table.d
    report = VerificationReport({"l": table.layout.l, "parts": list(table.layout.parts), "d": d})
    facets = tuple(r.facet for r in result.rows)
    f = _pad(f_vector(facets, d), d + 1)
    h = h_from_f(f, d)
    if facets != tuple(result.facets) or f != tuple(result.f) or h != tuple(result.h):
        report.add("stored_vectors", {"stored_h": list(result.h), "recomputed_h": list(h),
                                      "stored_facets": len(result.facets), "rows": len(facets)})
    else:
        report.add("stored_vectors")
    F = _pad(f_vector_of(result.multicomplex), d + 1)
    report.add("h_equals_F", None if h == F else {"h": list(h), "F": list(F)})
    hist = [0] * (d + 1)
    for r in result.rows:
        hist[r.restriction.size] += 1
    report.add("h_equals_R_histogram", None if tuple(hist) == h else {"h": list(h), "histogram": hist})
    full = table.facets
    position = {t: i for i, t in enumerate(full)}
    mismatch = None
    for i, r in enumerate(result.rows):
        if r.facet not in position:
            mismatch = {"row": i, "facet": list(from_mask(r.facet)), "reason": "not in full table"}
            break
        t_sub = maximal_intersections(r.facet, facets[:i])
        t_full = maximal_intersections(r.facet, full[:position[r.facet]])
        if t_sub != t_full:
            mismatch = {
                "row": i,
                "facet": list(from_mask(r.facet)),
                "T_sub": [list(from_mask(g)) for g in sorted(t_sub)],
                "T_full": [list(from_mask(g)) for g in sorted(t_full)],
            }
            break
    report.add("t_sets_preserved", mismatch)
    return report


def _extension_bounds(caps, d):
    """``bounds[i][f]``: the largest admissible ``F_{i+1}`` after ``F_i = f``.

    With initial segments the degree-(i+1) segment of length b is closed
    over the degree-i segment of length f exactly when every one of its
    members has all its one-variable quotients among the first f.
    """
    bounds = []
    for i in range(d):
        lower = enumerate_degree(caps, i)
        rank = {mu: r for r, mu in enumerate(lower)}
        need = []
        running = 0
        for nu in enumerate_degree(caps, i + 1):
            for j, c in enumerate(nu):
                if c:
                    running = max(running, rank[nu[:j] + (c - 1,) + nu[j + 1:]] + 1)
            need.append(running)
        row = []
        for f in range(len(lower) + 1):
            b = 0
            while b < len(need) and need[b] <= f:
                b += 1
            row.append(b)
        bounds.append(row)
    return bounds


def count_compressed(caps: Sequence, d: int) -> int:
    """Number of compressed multicomplexes of degree <= d in S(caps)."""
    bounds = _extension_bounds(tuple(caps), d)
    counts = {1: 1}
    total = 1  # F = (1)
    for i in range(d):
        nxt = {}
        for f, c in counts.items():
            for g in range(1, bounds[i][f] + 1):
                nxt[g] = nxt.get(g, 0) + c
        total += sum(nxt.values())
        counts = nxt
    return total


def iter_compressed_f_vectors(caps: Sequence, d: int):
    """F-vectors (padded to length d + 1) of every compressed multicomplex."""
    bounds = _extension_bounds(tuple(caps), d)

    def grow(prefix):
        i = len(prefix) - 1
        yield _pad(prefix, d + 1)
        if i < d:
            for g in range(1, bounds[i][prefix[-1]] + 1):
                yield from grow(prefix + (g,))

    yield from grow((1,))


def random_f_vectors(caps: Sequence, d: int, count: int, rng: random.Random):
    """``count`` random candidate F-vectors; entries never exceed slice sizes.

    Each entry is drawn uniformly from 0 up to the largest value admissible
    after the previous one, and stops early with probability 1/(d+1).
    Candidates are not guaranteed realizable; callers filter them.
    """
    bounds = _extension_bounds(tuple(caps), d)
    out = []
    for _ in range(count):
        F = [1]
        for i in range(d):
            if rng.random() < 1 / (d + 1):
                break
            F.append(rng.randint(0, bounds[i][F[-1]]))
            if F[-1] == 0:
                break
        out.append(_pad(F, d + 1))
    return out
