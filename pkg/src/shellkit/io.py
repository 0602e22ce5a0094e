"""JSON interchange and plain-text tables.

Monomials are exponent arrays, caps use ``null`` for unbounded entries,
faces are sorted arrays of vertex positions.
"""

from __future__ import annotations

import json
from typing import Sequence

from .complexes import FREE, VertexLayout, from_mask, to_mask
from .monomials import UNBOUNDED, as_caps, degree, format_monomial
from .shelling import INFINITY, RestrictionData, Row, ShellingTable


def caps_to_json(caps) -> list:
    return [None if a is UNBOUNDED else a for a in caps]


def caps_from_json(data) -> tuple:
    return as_caps(data)


def monomials_to_json(members) -> list:
    return [list(mu) for mu in sorted(members, key=lambda mu: (degree(mu), tuple(reversed(mu))))]


def monomials_from_json(data) -> frozenset:
    out = set()
    for mu in data:
        if not isinstance(mu, list) or not all(isinstance(c, int) and c >= 0 for c in mu):
            raise ValueError(f"bad monomial {mu!r}")
        out.add(tuple(mu))
    return frozenset(out)


def layout_to_json(layout: VertexLayout) -> dict:
    """``{"l", "parts", "order"}`` with vertices named 1..l for the simplex,
    then one consecutive block per part."""
    next_name = {FREE: 1}
    start = layout.l + 1
    for i, p in enumerate(layout.parts, start=1):
        next_name[i] = start
        start += p
    order = []
    for x in layout.part_of:
        order.append(next_name[x])
        next_name[x] += 1
    data = {"l": layout.l, "parts": list(layout.parts), "order": order}
    if layout.labels is not None:
        data["labels"] = list(layout.labels)
    return data


def layout_from_json(data: dict) -> VertexLayout:
    return VertexLayout.from_parts(int(data["l"]), data.get("parts", []), data.get("order"),
                                   data.get("labels"))


def table_to_json(table: ShellingTable) -> dict:
    return {
        "layout": layout_to_json(table.layout),
        "d": table.d,
        "caps": caps_to_json(table.caps),
        "rows": [
            {
                "facet": list(from_mask(r.facet)),
                "R": list(from_mask(r.restriction.r_set)),
                "sigma": None if r.sigma is None else list(r.sigma),
                "weight": r.weight,
            }
            for r in table.rows
        ],
    }


def table_from_json(data: dict) -> ShellingTable:
    """Rebuild a table exactly as stored; restriction faces are not recomputed."""
    layout = layout_from_json(data["layout"])
    d = int(data["d"])
    caps = caps_from_json(data["caps"]) if "caps" in data else layout.caps(d)
    rows = []
    for r in data["rows"]:
        rset = to_mask(r["R"])
        rd = RestrictionData(frozenset(), (), INFINITY, 0, 0, rset)
        sigma = None if r.get("sigma") is None else tuple(r["sigma"])
        rows.append(Row(to_mask(r["facet"]), rd, sigma))
    return ShellingTable(layout, d, caps, tuple(rows))


def realization_to_json(result) -> dict:
    return {
        "layout": layout_to_json(result.layout),
        "d": result.d,
        "multicomplex": monomials_to_json(result.multicomplex),
        "facets": [list(from_mask(t)) for t in result.facets],
        "h": list(result.h),
        "f": list(result.f),
        "rows": table_to_json(result.sub_table)["rows"],
    }


def render_table(table: ShellingTable, style=None) -> str:
    """Three columns: facet, number of new-face generators, monomial."""
    lay = table.layout
    body = [
        (lay.format_face(r.facet), str(r.weight), "-" if r.sigma is None else format_monomial(r.sigma))
        for r in table.rows
    ]
    return _columns(("tau", "|T(tau)|", "sigma(tau)"), body, style)


def _columns(header, body, style=None):
    widths = [max(len(x) for x in col) for col in zip(header, *body)]

    def line(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    head = line(header)
    if style is not None:
        head = style(head)
    out = [head, line(["-" * w for w in widths])]
    out += [line(cells) for cells in body]
    return "\n".join(out) + "\n"


def render_vector(v: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def render_realization(result) -> str:
    lay = result.layout
    lines = [
        "facets: " + " ".join(lay.format_face(t) for t in result.facets),
        "h: " + render_vector(result.h),
        "f: " + render_vector(result.f),
    ]
    return "\n".join(lines) + "\n"


def render_monomials(members) -> str:
    ordered = sorted(members, key=lambda mu: (degree(mu), tuple(reversed(mu))))
    return "{" + ", ".join(format_monomial(mu) for mu in ordered) + "}\n"


def render_report(report) -> str:
    lines = []
    inst = report.instance
    if inst:
        lines.append(" ".join(f"{k}={v}" for k, v in inst.items()))
    for c in report.checks:
        mark = "PASS" if c.passed else "FAIL"
        lines.append(f"  {mark} {c.name}")
        if c.counterexample is not None:
            lines.append("       " + json.dumps(c.counterexample))
    return "\n".join(lines) + "\n"
