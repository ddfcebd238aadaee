import pytest

from percert.core.constructions import (
    construct_product_chain,
    construct_star_product,
    construct_theta_product,
    construct_tree_product,
)
from percert.core.dsl import parse_spec
from percert.core.graph import FamilyKind, Graph, make_family, root_tree_at_leaf
from percert.core.percolation import EdgeSet, percolates
from percert.exceptions import ConstructionError, ParameterError


@pytest.mark.parametrize(
    "spec,r,size",
    [
        ("prod(path(2),path(3))", 2, 5),
        ("prod(path(2),path(4))", 2, 6),
        ("prod(star(2),star(2))", 2, 6),
        ("theta(4,4)", 2, 5),
        ("theta(4,4)", 3, 7),
        ("star(3)", 2, 2),
        ("path(5)", 2, 4),
        ("prod(path(2),path(1))", 1, 1),
    ],
)
def test_chain_constructions(certifier, spec, r, size):
    graph = parse_spec(spec)
    plan = construct_product_chain(graph, r, certifier.optimal_set)
    assert len(plan.total) == plan.expected == size
    assert percolates(plan.graph, plan.total, r)
    assert plan.to_dict()["size"] == size


def test_tree_construction_on_branching_tree(certifier):
    g = make_family(FamilyKind.PATH, 2)
    tree = root_tree_at_leaf(make_family(FamilyKind.STAR, 3))
    plan = construct_tree_product(g, tree, 2, certifier.optimal_set)
    assert percolates(plan.graph, plan.total, 2)
    assert set(plan.base_sets) == {0, 1, 2, 3}


def test_star_construction_copies(certifier):
    plan = construct_star_product(make_family(FamilyKind.PATH, 2), 2, 2, certifier.optimal_set)
    assert len(plan.base_sets[0]) == 1
    assert len(plan.total) == 5


def test_bad_supplier_is_caught():
    def empty(graph, r):
        return EdgeSet()

    with pytest.raises(ConstructionError):
        construct_star_product(make_family(FamilyKind.PATH, 3), 2, 2, empty)


def test_parameter_checks(certifier):
    with pytest.raises(ParameterError):
        construct_theta_product(make_family(FamilyKind.PATH, 2), 4, 4, 1, certifier.optimal_set)
    with pytest.raises(ParameterError):
        construct_product_chain(parse_spec("cycle(4)"), 2, certifier.optimal_set)
    with pytest.raises(ParameterError):
        construct_product_chain(Graph.unit(), 2, certifier.optimal_set)
