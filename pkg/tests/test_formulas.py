import pytest

from percert.core.formulas import (
    FormulaKind,
    Hypothesis,
    bounds_match_predicate,
    formula_path_corollary,
    formula_product_chain,
    formula_star_general,
    formula_star_product,
    formula_theta_general,
    formula_theta_product,
    formula_tree_exact,
    formula_tree_lower,
    formula_tree_upper,
    product_chain_table,
    step_histogram,
)
from percert.core.graph import DegreeHistogram, FamilyKind, make_family
from percert.exceptions import HypothesisError, ParameterError


def hist(kind, *params):
    return DegreeHistogram.of(make_family(kind, *params))


K1 = hist(FamilyKind.COMPLETE, 1)
P2 = hist(FamilyKind.PATH, 2)
# K_1 上 m_e 恒为 0
NONE = {i: 0 for i in range(6)}


class TestTree:
    def test_branching_tree_bounds_differ(self):
        t = hist(FamilyKind.STAR, 3)
        assert formula_tree_upper(NONE, K1, t, 4).value == 3
        assert formula_tree_lower(NONE, K1, t, 4).value == 2
        assert not bounds_match_predicate(K1, t, 4)

    def test_paths_always_match(self):
        for n in range(2, 6):
            for r in range(1, 5):
                assert bounds_match_predicate(P2, hist(FamilyKind.PATH, n), r)

    def test_exact_with_hypothesis(self):
        result = formula_tree_exact({2: 1, 1: 1}, P2, hist(FamilyKind.PATH, 3), 2, Hypothesis((1, 2), "product"))
        assert result.value == 5
        assert result.kind == FormulaKind.EXACT
        assert "product" in result.hypothesis

    def test_exact_refuses_without_hypothesis(self):
        with pytest.raises(HypothesisError):
            formula_tree_exact({2: 1, 1: 1}, P2, hist(FamilyKind.PATH, 3), 2, None)
        with pytest.raises(HypothesisError):
            formula_tree_exact({2: 1, 1: 1}, P2, hist(FamilyKind.PATH, 3), 2, Hypothesis((2,)))

    def test_exact_refuses_branching_tree_on_sparse_graph(self):
        with pytest.raises(HypothesisError):
            formula_tree_exact({}, K1, hist(FamilyKind.STAR, 3), 4, Hypothesis((3, 4)))

    def test_missing_value(self):
        with pytest.raises(ParameterError):
            formula_tree_upper({2: 1}, P2, hist(FamilyKind.PATH, 3), 2)


@pytest.mark.parametrize(
    "me,h,n,r,expected",
    [
        (NONE, K1, 4, 2, 3),
        ({2: 1, 1: 1}, P2, 4, 2, 6),
        ({1: 1}, P2, 2, 1, 1),
    ],
)
def test_path_corollary(me, h, n, r, expected):
    result = formula_path_corollary(me, h, n, r)
    assert result.value == expected
    assert result.kind == FormulaKind.UPPER


def test_path_corollary_with_hypothesis_is_exact():
    result = formula_path_corollary({2: 1, 1: 1}, P2, 4, 2, Hypothesis((1, 2)))
    assert result.kind == FormulaKind.EXACT


def test_star_general_on_single_vertex():
    assert formula_star_general(NONE, K1, 3, 2).value == 2
    assert formula_star_general(NONE, K1, 1, 2).value == 1


@pytest.mark.parametrize("r,expected", [(2, 5), (3, 7)])
def test_theta_general_on_single_vertex(r, expected):
    assert formula_theta_general(NONE, K1, 4, 4, r).value == expected


def test_theta_general_parameter_checks():
    with pytest.raises(ParameterError):
        formula_theta_general({}, K1, 4, 3, 2)
    with pytest.raises(ParameterError):
        formula_theta_general({}, K1, 4, 4, 1)


@pytest.mark.parametrize("a,r,expected", [([2, 2], 2, 6), ([3], 2, 2), ([4], 3, 3), ([1], 1, 1)])
def test_star_product(a, r, expected):
    result = formula_star_product(a, r)
    assert result.value == expected
    assert result.kind == FormulaKind.EXACT


@pytest.mark.parametrize("pairs,r,expected", [([(4, 4)], 2, 5), ([(4, 4)], 3, 7), ([(4, 4), (4, 4)], 2, 8)])
def test_theta_product(pairs, r, expected):
    assert formula_theta_product(pairs, r).value == expected


def test_theta_product_needs_r_above_one():
    with pytest.raises(ParameterError):
        formula_theta_product([(4, 4)], 1)


def test_product_chain_matches_grids():
    assert formula_product_chain([("path", 2), ("path", 3)], 2).value == 5
    assert formula_product_chain([("path", 2), ("path", 4)], 2).value == 6
    assert formula_product_chain([("path", 5)], 2).value == 4
    assert formula_product_chain([("path", 5)], 0).value == 0


def test_product_chain_table_starts_from_single_vertex():
    tables = product_chain_table([("star", 2)], 3)
    assert tables[0] == {0: 0, 1: 0, 2: 0, 3: 0}
    assert tables[1] == {0: 0, 1: 1, 2: 2, 3: 2}


def test_step_histogram_matches_graphs():
    assert step_histogram(("path", 4)) == hist(FamilyKind.PATH, 4)
    assert step_histogram(("star", 3)) == hist(FamilyKind.STAR, 3)
    assert step_histogram(("star", 1)) == hist(FamilyKind.STAR, 1)
    assert step_histogram(("theta", 5, 4)) == hist(FamilyKind.THETA, 5, 4)


@pytest.mark.parametrize("steps", [[("path", 1)], [("star", 0)], [("theta", 4, 3)], [("cycle", 4)]])
def test_product_chain_rejects_bad_steps(steps):
    with pytest.raises(ParameterError):
        formula_product_chain(steps, 2)
