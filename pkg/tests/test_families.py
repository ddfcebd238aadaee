import pytest

from percert.core.colouring import greedy_proper_colouring
from percert.core.families import star_lower_bound_family, theta_lower_bound_family, tree_lower_bound_family
from percert.core.graph import FamilyKind, make_family, root_tree_at_leaf
from percert.exceptions import ParameterError


def base(kind, *params):
    return greedy_proper_colouring(make_family(kind, *params))


def rooted(kind, *params):
    return root_tree_at_leaf(make_family(kind, *params))


def test_tree_family_on_square():
    report = tree_lower_bound_family(base(FamilyKind.PATH, 2), rooted(FamilyKind.PATH, 2), 2).verify()
    assert report.ok
    assert report.members == 4
    assert report.provenance == {"A_0": 1, "A_1": 1, "X^0": 2}


def test_tree_family_with_branching_vertex():
    report = tree_lower_bound_family(base(FamilyKind.COMPLETE, 1), rooted(FamilyKind.STAR, 3), 4).verify()
    assert report.ok
    assert report.members == report.claimed == 2
    assert report.provenance == {"X^0": 1, "X^1": 1}


def test_star_family_on_single_vertex():
    report = star_lower_bound_family(base(FamilyKind.COMPLETE, 1), 3, 2).verify()
    assert report.ok
    assert report.members == 2


def test_star_family_on_edge():
    report = star_lower_bound_family(base(FamilyKind.PATH, 2), 2, 2).verify()
    assert report.ok
    assert report.members == 5
    assert report.provenance == {"A_0": 1, "A_1": 1, "A_2": 1, "X_1^1": 2}


@pytest.mark.parametrize("k,l,r,expected", [(4, 4, 2, 5), (4, 4, 3, 7), (5, 4, 2, 6)])
def test_theta_family_on_single_vertex(k, l, r, expected):
    report = theta_lower_bound_family(base(FamilyKind.COMPLETE, 1), k, l, r).verify()
    assert report.ok
    assert report.members == expected


def test_parameter_checks():
    with pytest.raises(ParameterError):
        tree_lower_bound_family(base(FamilyKind.PATH, 2), rooted(FamilyKind.PATH, 2), 0)
    with pytest.raises(ParameterError):
        star_lower_bound_family(base(FamilyKind.PATH, 2), 0, 2)
    with pytest.raises(ParameterError):
        theta_lower_bound_family(base(FamilyKind.PATH, 2), 4, 4, 1)
