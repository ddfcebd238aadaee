from fractions import Fraction

import pytest
from hypothesis import given, settings

from percert.core.certifier import brute_force_me
from percert.core.colouring import EdgeColouring, greedy_proper_colouring, product_colouring_tree
from percert.core.graph import FamilyKind, make_family, root_tree_at_leaf
from percert.core.polynomial import Polynomial, PolyVector
from percert.core.witness import (
    WitnessFamily,
    basis_of_w,
    caps,
    coefficient_matrix,
    dim_w,
    membership_failures,
    w_membership,
    z_evaluate,
    zeros_lemma_witness,
)
from percert.exceptions import ColouringError, ParameterError, WitnessError

from .strategies import small_graphs


def greedy(kind, *params):
    return greedy_proper_colouring(make_family(kind, *params))


def test_single_edge_at_one():
    assert dim_w(greedy(FamilyKind.COMPLETE, 2), 1) == 1


def test_path_three_at_two():
    colouring = greedy(FamilyKind.PATH, 3)
    assert caps(colouring.graph, 2) == [1, 2, 1]
    assert dim_w(colouring, 2) == 2


def test_theta_dimension_is_forced():
    # 12 个未知量、7 条约束，秩至多 7
    assert dim_w(greedy(FamilyKind.THETA, 4, 4), 2) == 5


def test_zero_threshold():
    assert dim_w(greedy(FamilyKind.CYCLE, 5), 0) == 0
    with pytest.raises(ParameterError):
        dim_w(greedy(FamilyKind.CYCLE, 5), -1)


def test_membership():
    colouring = greedy(FamilyKind.PATH, 3)
    g = colouring.graph
    constant = PolyVector.build(g, {v: Polynomial((2,)) for v in g.vertices})
    assert w_membership(colouring, 2, constant)

    too_high = PolyVector.build(g, {(0,): Polynomial((0, 1))})
    problems = membership_failures(colouring, 2, too_high)
    assert any("deg" in p for p in problems)
    assert not w_membership(colouring, 2, too_high)


def test_basis_members_belong_to_w():
    colouring = EdgeColouring(
        make_family(FamilyKind.STAR, 3),
        {frozenset(((0,), (i,))): Fraction(i) for i in range(1, 4)},
    )
    family = basis_of_w(colouring, 2)
    report = family.verify()
    assert report.ok
    assert report.members == dim_w(colouring, 2) == 2


@settings(max_examples=25, deadline=None)
@given(small_graphs(max_vertices=5, max_edges=7))
def test_dimension_never_exceeds_minimum(g):
    colouring = greedy_proper_colouring(g)
    for r in (1, 2, 3):
        assert dim_w(colouring, r) <= brute_force_me(g, r)


def test_zeros_lemma_and_evaluation():
    base = greedy(FamilyKind.PATH, 3)
    assert base.colour((0,), (1,)) == 0 and base.colour((1,), (2,)) == 1
    vector = PolyVector.build(base.graph, {(1,): Polynomial((0, 1))})
    z = zeros_lemma_witness(base, vector, (1,))
    assert z[(1,)] == 1
    values = z_evaluate(base, vector, z)
    assert values[base.graph.index[(1,)]] == 1


def test_zeros_lemma_accepts_fresh_root_factor():
    base = greedy(FamilyKind.PATH, 3)
    lifted = product_colouring_tree(base, root_tree_at_leaf(make_family(FamilyKind.PATH, 2)))
    alpha = lifted.fresh[1]
    assert alpha == 2
    vector = PolyVector.build(lifted.graph, {(0, 0): Polynomial.from_roots([alpha])})
    z = zeros_lemma_witness(base, vector, (0, 0))
    assert z[(0,)] == 0
    assert z_evaluate(base, vector, z)[lifted.graph.index[(0, 0)]] == -2


def test_zeros_lemma_rejects_polynomials_vanishing_on_every_colour():
    base = greedy(FamilyKind.PATH, 3)
    with pytest.raises(WitnessError):
        zeros_lemma_witness(base, PolyVector.build(base.graph, {(1,): Polynomial.from_roots([0, 1])}), (1,))
    with pytest.raises(WitnessError):
        zeros_lemma_witness(base, PolyVector.build(base.graph, {}), (0,))


def test_z_must_use_incident_colours():
    base = greedy(FamilyKind.PATH, 3)
    vector = PolyVector.build(base.graph, {(1,): Polynomial((1,))})
    with pytest.raises(ColouringError):
        z_evaluate(base, vector, {(1,): Fraction(5)})


def test_coefficient_matrix_uses_canonical_unknowns():
    base = greedy(FamilyKind.PATH, 3)
    vector = PolyVector.build(base.graph, {(1,): Polynomial((3, 1)), (2,): Polynomial((5,))})
    assert coefficient_matrix(base.graph, 2, [vector]) == [(0, 3, 1, 5)]


def test_dependent_members_lower_the_rank():
    base = greedy(FamilyKind.PATH, 3)
    basis = basis_of_w(base, 2).members
    family = WitnessFamily(base, 2, [basis[0], basis[0], basis[1]], 3)
    report = family.verify()
    assert (report.members, report.rank) == (3, 2)
    assert not report.ok
    with pytest.raises(WitnessError):
        family.require()
