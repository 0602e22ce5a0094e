"""Brute-force oracles for shellings, restriction faces and the bijection.

None of these trust stored T-sets: they are recomputed from facet
intersections every time.  Stored restriction faces are read only by the
checks whose subject is the restriction face itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .complexes import VertexLayout, f_vector, from_mask, h_from_f, popcount, submasks
from .monomials import degree, enumerate_up_to, in_caps, revlex_less
from .shelling import (
    ShellingTable,
    build_shelling_sigma,
    construct,
    lift,
    maximal_intersections,
    restriction,
    sub_layout,
)


@dataclass
class Check:
    name: str
    passed: bool
    counterexample: dict | None = None

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "counterexample": self.counterexample}


@dataclass
class VerificationReport:
    instance: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, counterexample=None):
        self.checks.append(Check(name, counterexample is None, counterexample))
        return self

    def extend(self, other: "VerificationReport"):
        self.checks.extend(other.checks)
        return self

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "instance": self.instance,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _faces(masks):
    return [list(from_mask(g)) for g in sorted(masks)]


def describe(table: ShellingTable) -> dict:
    lay = table.layout
    return {"l": lay.l, "parts": list(lay.parts), "d": table.d}


def verify_shelling(facets: Sequence[int], d: int) -> VerificationReport:
    """Each facet must meet the union of its predecessors in a pure
    (d-2)-dimensional complex; facets must be distinct and of size d."""
    report = VerificationReport({"d": d, "facets": len(facets)})
    bad = next((t for t in facets if popcount(t) != d), None)
    if bad is not None:
        return report.add("shelling", {"reason": "facet of wrong size", "facet": list(from_mask(bad))})
    seen = set()
    for i, tau in enumerate(facets):
        if tau in seen:
            return report.add("shelling", {"reason": "repeated facet", "row": i, "facet": list(from_mask(tau))})
        seen.add(tau)
    for i in range(1, len(facets)):
        tau = facets[i]
        inter = {tau & t for t in facets[:i]}
        # vertices v with tau - v among the intersections
        droppable = 0
        for g in inter:
            if popcount(g) == d - 1:
                droppable |= tau & ~g
        for g in inter:
            if not (tau & ~g) & droppable:
                return report.add("shelling", {
                    "row": i,
                    "facet": list(from_mask(tau)),
                    "non_pure_face": list(from_mask(g)),
                })
    return report.add("shelling")


def verify_restriction_identity(table: ShellingTable) -> VerificationReport:
    """New faces of each row are exactly the faces containing its restriction."""
    report = VerificationReport(describe(table))
    facets = table.facets
    for i, row in enumerate(table.rows):
        tau, r = row.facet, row.restriction.r_set
        earlier = facets[:i]
        for g in submasks(tau):
            new = not any(g & ~t == 0 for t in earlier)
            if new != (g & r == r):
                return report.add("restriction_identity", {
                    "row": i,
                    "facet": list(from_mask(tau)),
                    "R": list(from_mask(r)),
                    "face": list(from_mask(g)),
                    "face_is_new": new,
                })
    return report.add("restriction_identity")


def verify_degree_match(table: ShellingTable) -> VerificationReport:
    report = VerificationReport(describe(table))
    facets = table.facets
    for i, row in enumerate(table.rows):
        t = maximal_intersections(row.facet, facets[:i])
        if degree(row.sigma) != len(t) or row.restriction.size != len(t):
            return report.add("degree_match", {
                "row": i,
                "facet": list(from_mask(row.facet)),
                "T": _faces(t),
                "sigma": list(row.sigma),
                "R": list(from_mask(row.restriction.r_set)),
            })
    return report.add("degree_match")


def _divisors_of_degree(mu, e):
    ranges = [range(c + 1) for c in mu]
    for nu in itertools.product(*ranges):
        if sum(nu) == e:
            yield nu


def _order_witness(sigma_i, sigma_j):
    e = degree(sigma_j)
    for nu in _divisors_of_degree(sigma_i, e):
        if nu == tuple(sigma_j) or revlex_less(sigma_j, nu):
            return nu
    return None


def verify_order_property(table: ShellingTable) -> VerificationReport:
    """Every face in T(tau_i) lies in an earlier tau_j whose monomial is
    revlex-below some equal-degree divisor of sigma(tau_i)."""
    report = VerificationReport(describe(table))
    rows = table.rows
    facets = table.facets
    for i, row in enumerate(rows):
        for g in sorted(maximal_intersections(row.facet, facets[:i])):
            found = False
            for j in range(i):
                if g & ~facets[j] == 0 and _order_witness(row.sigma, rows[j].sigma) is not None:
                    found = True
                    break
            if not found:
                return report.add("order_property", {
                    "row": i,
                    "facet": list(from_mask(row.facet)),
                    "sigma": list(row.sigma),
                    "face": list(from_mask(g)),
                    "containing_rows": [j for j in range(i) if g & ~facets[j] == 0],
                })
    return report.add("order_property")


def verify_h_consistency(table: ShellingTable) -> VerificationReport:
    report = VerificationReport(describe(table))
    d = table.d
    hist = [0] * (d + 1)
    for row in table.rows:
        hist[row.restriction.size] += 1
    expected = h_from_f(f_vector(table.facets, d), d)
    if tuple(hist) != expected:
        return report.add("h_consistency", {"histogram": hist, "h_from_f": list(expected)})
    return report.add("h_consistency")


def verify_bijection(table: ShellingTable) -> VerificationReport:
    """Monomials are distinct and exhaust the degree <= d part of S(caps)."""
    report = VerificationReport(describe(table))
    target = set(enumerate_up_to(table.caps, table.d))
    seen = set()
    for i, row in enumerate(table.rows):
        mu = row.sigma
        if mu is None or not in_caps(mu, table.caps) or degree(mu) > table.d:
            return report.add("bijection", {"row": i, "sigma": None if mu is None else list(mu)})
        if mu in seen:
            return report.add("bijection", {"row": i, "sigma": list(mu), "reason": "repeated"})
        seen.add(mu)
    if seen != target:
        missing = sorted(target - seen)
        return report.add("bijection", {"reason": "not onto", "missing": [list(x) for x in missing[:5]]})
    return report.add("bijection")


def verify_recursive_r_agreement(layout: VertexLayout, d: int) -> VerificationReport:
    """Restriction faces carried through the recursion agree with those
    computed in the top-level order, at every level of the recursion."""
    report = VerificationReport({"l": layout.l, "parts": list(layout.parts), "d": d})
    top_embed = tuple(range(1, layout.n + 1))
    failure = _check_frame(layout, d, top_embed)
    return report.add("recursive_r_agreement", failure)


def _check_frame(layout, d, embed):
    if d == 1:
        return None
    if restriction(layout, (1 << d) - 1).r_set:
        return {"reason": "initial facet has non-empty restriction", "depth_d": d}
    for k in range(1, layout.n - d + 1):
        frame = sub_layout(layout, d, k)
        if frame is None:
            continue
        child, child_embed = frame
        top = 1 << (d + k - 1)
        for g, _ in construct(child, d - 1):
            local = lift(restriction(child, g).r_set, child_embed) | top
            tau = lift(g, child_embed) | top
            direct = restriction(layout, tau).r_set
            if local != direct:
                return {
                    "depth_d": d,
                    "k": k,
                    "facet": list(from_mask(lift(tau, embed))),
                    "recursive_R": list(from_mask(lift(local, embed))),
                    "direct_R": list(from_mask(lift(direct, embed))),
                }
        composed = tuple(embed[q - 1] for q in child_embed)
        failure = _check_frame(child, d - 1, composed)
        if failure is not None:
            return failure
    return None


def verify_table(table: ShellingTable, recursive: bool = True) -> VerificationReport:
    """All checks on one table.  ``recursive`` adds the recursion agreement."""
    report = VerificationReport(describe(table))
    report.extend(verify_shelling(table.facets, table.d))
    report.extend(verify_restriction_identity(table))
    if all(r.sigma is not None for r in table.rows):
        report.extend(verify_degree_match(table))
        report.extend(verify_order_property(table))
        report.extend(verify_bijection(table))
    report.extend(verify_h_consistency(table))
    if recursive:
        report.extend(verify_recursive_r_agreement(table.layout, table.d))
    return report


def iter_layouts(max_n: int, l_values=None, part_sizes=None, all_orders=False):
    """Every layout with ``n <= max_n`` (and ``n - m >= 1``).

    ``l_values`` and ``part_sizes`` restrict the simplex size and the
    allowed part sizes; by default everything fitting in ``max_n``.  With
    ``all_orders`` every vertex order meeting the ordering constraint is
    produced (up to relabelling within a part), not just the default one.
    """
    l_values = range(max_n + 1) if l_values is None else l_values
    part_sizes = sorted(range(2, max_n + 1) if part_sizes is None else part_sizes, reverse=True)
    for l in l_values:
        for parts in _multisets(part_sizes, max_n - l):
            n = l + sum(parts)
            if n - len(parts) < 1:
                continue
            if not all_orders:
                yield VertexLayout.from_parts(l, parts)
                continue
            pool = [0] * l
            for i, p in enumerate(parts, start=1):
                pool += [i] * (p - 1)
            tail = tuple(range(1, len(parts) + 1))
            for head in sorted(set(itertools.permutations(pool))):
                yield VertexLayout(head + tail)


def _multisets(sizes, budget, start=0):
    yield ()
    for idx in range(start, len(sizes)):
        s = sizes[idx]
        if s <= budget:
            for rest in _multisets(sizes, budget - s, idx):
                yield (s,) + rest


def sweep(max_n: int, l_values=None, part_sizes=None, all_orders=False):
    """Run every check on every recursive table with ``n <= max_n``.

    Yields one report per (layout, d); the revlex baseline is checked for
    shelling legality alongside.
    """
    from .shelling import revlex_shelling

    for layout in iter_layouts(max_n, l_values, part_sizes, all_orders):
        for d in range(1, layout.n - layout.m + 1):
            report = verify_table(build_shelling_sigma(layout, d))
            base = verify_shelling(revlex_shelling(layout, d).facets, d)
            base.checks[0].name = "revlex_shelling"
            report.extend(base)
            yield report
