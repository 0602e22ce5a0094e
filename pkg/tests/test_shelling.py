import pytest

from shellkit.complexes import VertexLayout, from_mask, lambda_facets, to_mask
from shellkit.monomials import enumerate_degree, format_monomial
from shellkit.shelling import (
    INFINITY,
    build_shelling_sigma,
    construct,
    naive_sigma,
    restriction,
    revlex_shelling,
    sub_layout,
    t_set,
)
from shellkit.verify import iter_layouts

import oracles


def faces(*names):
    return tuple(to_mask(int(c) for c in s) for s in names)


def rendered(table, layout=None):
    layout = layout or table.layout
    return [(layout.format_face(r.facet), r.weight, format_monomial(r.sigma)) for r in table.rows]


@pytest.fixture(scope="module")
def lam33():
    return VertexLayout.from_parts(0, [3, 3])


@pytest.fixture(scope="module")
def lam1543():
    return VertexLayout.from_parts(1, [5, 4, 3])


def test_restriction_worked_example(lam1543):
    rd = restriction(lam1543, to_mask([1, 2, 4, 5, 6, 9, 11, 12]))
    assert rd.full == {2}
    assert rd.miss == ((2, 3),)
    assert rd.s == 7
    assert from_mask(rd.u_set) == (6, 9, 12)
    assert from_mask(rd.tail) == (9, 11, 12)
    assert from_mask(rd.r_set) == (6, 9, 11, 12)


def test_restriction_of_initial_facet(lam1543):
    rd = restriction(lam1543, to_mask(range(1, 9)))
    assert rd.s == 9 and rd.r_set == 0


def test_restriction_matches_minimal_new_face(lam33):
    # oracle: the unique minimal face of 2345 missing from revlex-earlier facets
    order = [from_mask(t) for t in lambda_facets(lam33, 4)]
    i = order.index((2, 3, 4, 5))
    new = oracles.new_faces((2, 3, 4, 5), order[:i])
    assert min(new, key=len) == (3, 5)
    assert from_mask(restriction(lam33, to_mask([2, 3, 4, 5])).r_set) == (3, 5)


def test_restriction_with_no_eligible_vertex():
    lay = VertexLayout.from_parts(0, [2, 2])
    rd = restriction(lay, to_mask([1, 2]))
    # both parts are full and everything else is in tau
    assert rd.s is INFINITY and rd.tail == 0
    assert from_mask(rd.r_set) == (from_mask(rd.u_set))


def test_restriction_rejects_non_faces(lam33):
    with pytest.raises(ValueError):
        restriction(lam33, to_mask([1, 3, 5, 2]))


def test_revlex_shelling(lam33):
    table = revlex_shelling(lam33, 4)
    assert table.facets == faces("1234", "1245", "2345", "1236", "1346", "1256", "2356", "1456", "3456")
    assert table.weights == (0, 1, 2, 1, 2, 2, 3, 3, 4)
    single = revlex_shelling(VertexLayout.from_parts(2, []), 2)
    assert len(single) == 1 and single.rows[0].restriction.r_set == 0


@pytest.mark.parametrize("layout", list(iter_layouts(7)), ids=lambda x: f"{x.l};{x.parts}")
def test_revlex_first_facet_is_initial_segment(layout):
    for d in range(1, layout.n - layout.m + 1):
        assert revlex_shelling(layout, d).facets[0] == (1 << d) - 1


def test_naive_sigma_table(lam33):
    table = naive_sigma(revlex_shelling(lam33, 4))
    assert rendered(table) == [
        ("1234", 0, "1"), ("1245", 1, "x1"), ("2345", 2, "x1^2"),
        ("1236", 1, "x2"), ("1346", 2, "x1x2"), ("1256", 2, "x2^2"),
        ("2356", 3, "x1^2x2"), ("1456", 3, "x1x2^2"), ("3456", 4, "x1^2x2^2"),
    ]


def test_naive_sigma_small():
    assert rendered(naive_sigma(revlex_shelling(VertexLayout.from_parts(3, []), 3)))[0][2] == "1"
    lay = VertexLayout.from_parts(1, [2])
    assert rendered(naive_sigma(revlex_shelling(lay, 2))) == [("12", 0, "1"), ("13", 1, "x1")]


def test_naive_sigma_runs_out_of_monomials(lam33):
    with pytest.raises(ValueError):
        naive_sigma(revlex_shelling(lam33, 4), caps=(1, 1))


def test_recursive_table(lam33):
    table = build_shelling_sigma(lam33, 4)
    assert rendered(table) == [
        ("1234", 0, "1"), ("1245", 1, "x1"), ("2345", 2, "x1^2"),
        ("1236", 1, "x2"), ("1256", 2, "x1x2"), ("2356", 3, "x1^2x2"),
        ("1346", 2, "x2^2"), ("1456", 3, "x1x2^2"), ("3456", 4, "x1^2x2^2"),
    ]


def test_recursive_subtable_with_reordered_vertices(lam33):
    child, embed = sub_layout(lam33, 4, 2)
    assert embed == (1, 2, 3, 5, 4)
    labelled = VertexLayout(child.part_of, labels=embed)
    table = build_shelling_sigma(labelled, 3)
    assert rendered(table) == [
        ("123", 0, "1"), ("125", 1, "x1"), ("235", 2, "x1^2"),
        ("134", 1, "x2"), ("154", 2, "x1x2"), ("354", 3, "x1^2x2"),
    ]


def test_base_case():
    table = build_shelling_sigma(VertexLayout.from_parts(3, []), 1)
    assert [(from_mask(r.facet), r.sigma) for r in table.rows] == [((1,), (0, 0)), ((2,), (1, 0)), ((3,), (0, 1))]
    table = build_shelling_sigma(VertexLayout.from_parts(1, [2]), 1)
    assert [r.sigma for r in table.rows] == [(0, 0), (1, 0), (0, 1)]


def test_sub_layout_of_worked_example(lam1543):
    # tau = G + y12 in the 8-skeleton: y9 moves to the end
    child, embed = sub_layout(lam1543, 8, 4)
    assert embed == (1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 9)
    assert child.l == 3 and child.parts == (5, 3)
    tau = to_mask([1, 2, 4, 5, 6, 9, 11, 12])
    g = to_mask([embed.index(v) + 1 for v in (1, 2, 4, 5, 6, 9, 11)])
    r_child = from_mask(restriction(child, g).r_set)
    assert {embed[q - 1] for q in r_child} | {12} == set(from_mask(restriction(lam1543, tau).r_set))


def test_singleton_parts_are_skipped():
    lay = VertexLayout((0, 0, 1), allow_singletons=True)
    assert sub_layout(lay, 2, 1) is None
    assert construct(lay, 2) == ((0b011, (0,)),)


def test_same_restrictions_in_both_orders():
    for layout in iter_layouts(7, part_sizes=(2, 3, 4)):
        for d in range(1, layout.n - layout.m + 1):
            a = {r.facet: r.restriction.r_set for r in revlex_shelling(layout, d).rows}
            b = {r.facet: r.restriction.r_set for r in build_shelling_sigma(layout, d).rows}
            assert a == b


def test_t_set_examples(lam33):
    table = build_shelling_sigma(lam33, 4)
    i = table.row_of(to_mask([2, 3, 5, 6]))
    assert t_set(table, i) == set(faces("235", "236", "256"))
    assert t_set(table, 0) == frozenset()
    naive = naive_sigma(revlex_shelling(lam33, 4))
    keep = {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1)}
    sub = [r.facet for r in naive.rows if r.sigma in keep]
    assert t_set(sub, sub.index(to_mask([2, 3, 5, 6]))) == set(faces("235", "236"))


def test_t_set_matches_bruteforce(lam33):
    table = build_shelling_sigma(lam33, 4)
    facets = [from_mask(t) for t in table.facets]
    for i in range(1, len(facets)):
        expected = oracles.t_set_bruteforce(facets[i], facets[:i])
        assert {from_mask(g) for g in t_set(table, i)} == expected


def test_build_rejects_bad_dimension(lam33):
    with pytest.raises(ValueError):
        build_shelling_sigma(lam33, 5)


def test_sigma_lands_in_degree_slices(lam33):
    table = build_shelling_sigma(lam33, 4)
    for r in table.rows:
        assert r.sigma in enumerate_degree(table.caps, sum(r.sigma))
