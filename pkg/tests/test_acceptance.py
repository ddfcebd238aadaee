"""
端到端核对：穷举、下界、构造与公式在小实例上完全一致
"""
import pytest
from hypothesis import given, settings

from percert.core.certifier import CertStatus, brute_force_me, certify_me
from percert.core.colouring import (
    greedy_proper_colouring,
    permuted_greedy_colourings,
    product_colouring_chain,
    rebind,
)
from percert.core.dsl import parse_spec
from percert.core.families import star_lower_bound_family, theta_lower_bound_family, tree_lower_bound_family
from percert.core.formulas import (
    bounds_match_predicate,
    formula_path_corollary,
    formula_star_general,
    formula_star_product,
    formula_theta_general,
    formula_theta_product,
)
from percert.core.graph import DegreeHistogram, FamilyKind, Graph, make_family, root_tree_at_leaf
from percert.core.witness import dim_w

from .strategies import small_graphs


@pytest.mark.parametrize("a", range(1, 6))
def test_star_baseline(a):
    star = make_family(FamilyKind.STAR, a)
    for r in range(1, 6):
        assert brute_force_me(star, r) == min(a, r) == formula_star_product([a], r).value


@pytest.mark.parametrize("n", range(2, 8))
def test_path_baseline(n):
    path = make_family(FamilyKind.PATH, n)
    k1 = DegreeHistogram.of(make_family(FamilyKind.COMPLETE, 1))
    none = {i: 0 for i in range(4)}
    assert brute_force_me(path, 1) == 1
    for r in (2, 3):
        assert brute_force_me(path, r) == n - 1 == formula_path_corollary(none, k1, n, r).value


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ladders(n):
    graph = parse_spec(f"prod(path(2),path({n}))")
    cert = certify_me(graph, 2)
    assert cert.status == CertStatus.EXACT
    assert cert.value == cert.lower == n + 2
    if n <= 3:
        assert brute_force_me(graph, 2) == n + 2


@pytest.mark.slow
def test_star_square_by_every_route():
    graph = parse_spec("prod(star(2),star(2))")
    cert = certify_me(graph, 2)
    assert cert.lower == cert.value == formula_star_product([2, 2], 2).value == 6
    assert brute_force_me(graph, 2, floor=5) == 6


@pytest.mark.parametrize("k,l", [(4, 4), (5, 4), (5, 5)])
def test_thetas(k, l):
    theta = make_family(FamilyKind.THETA, k, l)
    assert brute_force_me(theta, 2) == k + l - 3 == dim_w(product_colouring_chain([theta]), 2)
    if (k, l) == (4, 4):
        assert brute_force_me(theta, 3) == k + l - 1


@pytest.mark.slow
@settings(max_examples=40, deadline=None)
@given(small_graphs(max_vertices=7, max_edges=10))
def test_dimension_bounds_minimum_for_permuted_colourings(g):
    colourings = [greedy_proper_colouring(g)] + permuted_greedy_colourings(g, 3, seed=g.size)
    for r in (1, 2, 3):
        best = brute_force_me(g, r)
        assert all(dim_w(c, r) <= best for c in colourings)


BASES = [
    make_family(FamilyKind.COMPLETE, 1),
    make_family(FamilyKind.PATH, 2),
    make_family(FamilyKind.PATH, 3),
    make_family(FamilyKind.STAR, 2),
]


@pytest.mark.slow
@pytest.mark.parametrize("base", BASES, ids=lambda g: g.ident)
@pytest.mark.parametrize("tree", [(FamilyKind.PATH, 2), (FamilyKind.PATH, 3), (FamilyKind.STAR, 3)])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_tree_families(base, tree, r):
    report = tree_lower_bound_family(greedy_proper_colouring(base), root_tree_at_leaf(make_family(*tree)), r).verify()
    assert report.ok


@pytest.mark.slow
@pytest.mark.parametrize("base", BASES, ids=lambda g: g.ident)
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_star_families(base, k, r):
    assert star_lower_bound_family(greedy_proper_colouring(base), k, r).verify().ok


@pytest.mark.slow
@pytest.mark.parametrize("base", BASES, ids=lambda g: g.ident)
@pytest.mark.parametrize("k,l", [(4, 4), (5, 4)])
@pytest.mark.parametrize("r", [2, 3])
def test_theta_families(base, k, l, r):
    assert theta_lower_bound_family(greedy_proper_colouring(base), k, l, r).verify().ok


def _spider() -> Graph:
    return Graph.from_edges(
        [(i,) for i in range(6)],
        [((0,), (1,)), ((0,), (2,)), ((0,), (3,)), ((3,), (4,)), ((4,), (5,))],
    )


def test_bounds_match_classification():
    graphs = BASES + [
        make_family(FamilyKind.STAR, 3),
        make_family(FamilyKind.CYCLE, 4),
        make_family(FamilyKind.COMPLETE, 4),
        make_family(FamilyKind.THETA, 4, 4),
    ]
    trees = [make_family(FamilyKind.PATH, n) for n in range(2, 7)]
    trees += [make_family(FamilyKind.STAR, k) for k in range(3, 6)]
    trees.append(_spider())
    for g in graphs:
        hist_g = DegreeHistogram.of(g)
        for t in trees:
            hist_t = DegreeHistogram.of(t)
            for r in range(1, 6):
                expected = hist_g.min_degree >= r - 2 or t.max_degree <= 2
                assert bounds_match_predicate(hist_g, hist_t, r) == expected, (g.ident, t.ident, r)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_star_recursion_matches_materialised_factor(r):
    s2 = make_family(FamilyKind.STAR, 2)
    me = {i: certify_me(s2, i).value for i in (r - 1, r)}
    assert formula_star_general(me, DegreeHistogram.of(s2), 2, r).value == formula_star_product([2, 2], r).value


@pytest.mark.parametrize("r", [2, 3, 4])
def test_theta_recursion_matches_materialised_factor(r):
    theta = make_family(FamilyKind.THETA, 4, 4)
    me = {i: certify_me(theta, i).value for i in (r - 2, r - 1, r) if i >= 1}
    materialised = formula_theta_general(me, DegreeHistogram.of(theta), 4, 4, r).value
    assert materialised == formula_theta_product([(4, 4), (4, 4)], r).value
    assert formula_theta_product([(4, 4)], r).value == certify_me(theta, r).value


@pytest.mark.slow
def test_theta_square_dimension_matches_recursion():
    theta = make_family(FamilyKind.THETA, 4, 4)
    graph = parse_spec("prod(theta(4,4),theta(4,4))")
    colouring = rebind(product_colouring_chain([theta, theta]), graph)
    assert (graph.order, graph.size) == (36, 84)
    assert dim_w(colouring, 2) == formula_theta_product([(4, 4), (4, 4)], 2).value == 8
