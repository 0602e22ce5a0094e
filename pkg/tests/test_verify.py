import dataclasses

import pytest

from shellkit.complexes import VertexLayout, to_mask
from shellkit.shelling import Row, ShellingTable, build_shelling_sigma, naive_sigma, revlex_shelling
from shellkit.verify import (
    iter_layouts,
    sweep,
    verify_bijection,
    verify_degree_match,
    verify_h_consistency,
    verify_order_property,
    verify_recursive_r_agreement,
    verify_restriction_identity,
    verify_shelling,
    verify_table,
)

M3 = {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1)}


@pytest.fixture(scope="module")
def lam33():
    return VertexLayout.from_parts(0, [3, 3])


@pytest.fixture(scope="module")
def table(lam33):
    return build_shelling_sigma(lam33, 4)


def replace_row(table, i, **changes):
    rows = list(table.rows)
    rows[i] = dataclasses.replace(rows[i], **changes)
    return ShellingTable(table.layout, table.d, table.caps, tuple(rows))


def test_verify_shelling(table):
    assert verify_shelling(table.facets, 4).passed
    bad = verify_shelling((to_mask([1, 2, 3, 4]), to_mask([3, 4, 5, 6])), 4)
    assert not bad.passed
    assert bad.checks[0].counterexample["row"] == 1
    assert verify_shelling((to_mask([1, 2, 3]),), 3).passed
    assert not verify_shelling((to_mask([1, 2]), to_mask([1, 2])), 2).passed


def test_verify_restriction_identity(table, lam33):
    assert verify_restriction_identity(table).passed
    assert verify_restriction_identity(revlex_shelling(lam33, 4)).passed
    row = table.rows[4]
    forged = dataclasses.replace(row.restriction, r_set=row.facet)
    report = verify_restriction_identity(replace_row(table, 4, restriction=forged))
    assert not report.passed
    assert report.checks[0].counterexample["row"] == 4


def test_verify_order_property(table, lam33):
    assert verify_order_property(table).passed
    report = verify_order_property(naive_sigma(revlex_shelling(lam33, 4)))
    assert not report.passed
    ce = report.checks[0].counterexample
    assert ce["facet"] == [2, 3, 5, 6]
    assert ce["face"] == [2, 5, 6]
    base = build_shelling_sigma(VertexLayout.from_parts(4, []), 1)
    assert verify_order_property(base).passed


def test_verify_degree_match(table, lam33):
    assert verify_degree_match(table).passed
    naive = naive_sigma(revlex_shelling(lam33, 4))
    i, j = naive.row_of(to_mask([1, 3, 4, 6])), naive.row_of(to_mask([1, 2, 5, 6]))
    swapped = replace_row(replace_row(naive, i, sigma=naive.rows[j].sigma), j, sigma=naive.rows[i].sigma)
    assert verify_degree_match(swapped).passed
    assert not verify_degree_match(replace_row(table, 3, sigma=(2, 0))).passed


def test_verify_h_consistency(table):
    report = verify_h_consistency(table)
    assert report.passed
    single = build_shelling_sigma(VertexLayout.from_parts(4, []), 4)
    assert verify_h_consistency(single).passed
    sub_rows = tuple(r for r in table.rows if r.sigma in M3)
    sub = ShellingTable(table.layout, table.d, table.caps, sub_rows)
    assert verify_h_consistency(sub).passed


def test_verify_bijection(table):
    assert verify_bijection(table).passed
    assert not verify_bijection(replace_row(table, 8, sigma=(0, 0))).passed
    assert not verify_bijection(replace_row(table, 8, sigma=(3, 1))).passed


def test_recursive_agreement():
    lay = VertexLayout.from_parts(1, [5, 4, 3])
    assert verify_recursive_r_agreement(lay, 8).passed
    assert verify_recursive_r_agreement(lay, 1).passed


def test_verify_table_on_revlex_skips_sigma_checks(lam33):
    report = verify_table(revlex_shelling(lam33, 4), recursive=False)
    assert report.passed
    assert [c.name for c in report.checks] == ["shelling", "restriction_identity", "h_consistency"]


def test_report_serialises(table):
    data = verify_table(table).to_dict()
    assert data["passed"] is True
    assert {c["name"] for c in data["checks"]} >= {"shelling", "order_property", "recursive_r_agreement"}


def test_small_sweep_all_orders():
    reports = list(sweep(6, all_orders=True))
    assert reports and all(r.passed for r in reports)


def test_iter_layouts_counts():
    layouts = list(iter_layouts(4, part_sizes=(2, 3)))
    shapes = {(x.l, x.parts) for x in layouts}
    assert (0, (2, 2)) in shapes and (1, (3,)) in shapes and (4, ()) in shapes
    assert (0, ()) not in shapes
    # Lambda(0;2,2) has orders 1212 and 2112 up to relabelling
    assert len([x for x in iter_layouts(4, [0], [2], all_orders=True) if x.n == 4]) == 2
