import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from percert.core.colouring import (
    EdgeColouring,
    chain_step_kind,
    greedy_proper_colouring,
    load_colouring_file,
    permuted_greedy_colourings,
    product_colouring_chain,
    product_colouring_star,
    product_colouring_theta,
    product_colouring_tree,
    rebind,
)
from percert.core.dsl import parse_spec
from percert.core.graph import FamilyKind, Graph, make_family, root_tree_at_leaf
from percert.exceptions import ColouringError, GraphFileError, ParameterError

from .strategies import small_graphs


def unit_colouring():
    return EdgeColouring(Graph.unit(), {})


@settings(max_examples=50, deadline=None)
@given(small_graphs())
def test_greedy_is_proper_and_bounded(g):
    colouring = greedy_proper_colouring(g)
    assert colouring.provenance == "greedy"
    if g.size:
        assert max(colouring.palette) <= 2 * g.max_degree - 2


def test_greedy_rejects_bad_order():
    with pytest.raises(ParameterError):
        greedy_proper_colouring(make_family(FamilyKind.PATH, 3), [0, 0])


def test_improper_and_incomplete_colourings_rejected():
    g = make_family(FamilyKind.PATH, 3)
    a, b = (frozenset(e) for e in g.edges)
    with pytest.raises(ColouringError):
        EdgeColouring(g, {a: Fraction(0), b: Fraction(0)})
    with pytest.raises(ColouringError):
        EdgeColouring(g, {a: Fraction(0)})


def test_permuted_colourings_are_reproducible():
    g = make_family(FamilyKind.COMPLETE, 4)
    first = permuted_greedy_colourings(g, 3, seed=7)
    second = permuted_greedy_colourings(g, 3, seed=7)
    assert [c.colours for c in first] == [c.colours for c in second]
    assert [c.provenance for c in first] == ["greedy-permuted[7:0]", "greedy-permuted[7:1]", "greedy-permuted[7:2]"]


def test_tree_product_colours_rungs_fresh():
    base = greedy_proper_colouring(make_family(FamilyKind.PATH, 2))
    colouring = product_colouring_tree(base, root_tree_at_leaf(make_family(FamilyKind.PATH, 2)))
    assert colouring.fresh == {1: Fraction(1)}
    assert colouring.colour((0, 0), (1, 0)) == 0
    assert colouring.colour((0, 0), (0, 1)) == 1
    assert colouring.colour((1, 0), (1, 1)) == 1


def test_star_product_fresh_colours_follow_palette():
    base = greedy_proper_colouring(make_family(FamilyKind.PATH, 3))
    colouring = product_colouring_star(base, 3)
    top = max(base.palette)
    assert colouring.fresh == {i: top + i for i in range(1, 4)}
    assert colouring.colour((1, 0), (1, 2)) == top + 2


def test_theta_product_uses_one_fresh_colour_per_edge():
    colouring = product_colouring_theta(unit_colouring(), 4, 4)
    assert len(colouring.fresh) == 7
    assert len(colouring.palette) == 7
    assert colouring.fresh["1"] == 1
    assert colouring.colour(("2",), ("3'",)) == colouring.fresh["2'"]
    with pytest.raises(ParameterError):
        product_colouring_theta(unit_colouring(), 4, 3)


def test_chain_step_kinds():
    assert chain_step_kind(make_family(FamilyKind.PATH, 1)) == "single"
    assert chain_step_kind(make_family(FamilyKind.PATH, 3)) == "tree"
    assert chain_step_kind(make_family(FamilyKind.STAR, 3)) == "star"
    assert chain_step_kind(make_family(FamilyKind.THETA, 4, 4)) == "theta"
    assert chain_step_kind(make_family(FamilyKind.THETA, 4, 3)) is None
    assert chain_step_kind(make_family(FamilyKind.CYCLE, 4)) is None


def test_chain_colouring_matches_parsed_graph():
    graph = parse_spec("prod(path(2),star(2),path(1))")
    colouring = rebind(product_colouring_chain([spec.build() for spec in graph.factors]), graph)
    assert colouring.provenance == "product"
    assert colouring.graph is graph
    with pytest.raises(ParameterError):
        product_colouring_chain([make_family(FamilyKind.CYCLE, 4)])


def test_rebind_rejects_other_graph():
    colouring = greedy_proper_colouring(make_family(FamilyKind.PATH, 3))
    with pytest.raises(ColouringError):
        rebind(colouring, make_family(FamilyKind.PATH, 4))


def test_load_colouring_file(tmp_path):
    g = make_family(FamilyKind.PATH, 3)
    path = tmp_path / "c.json"
    path.write_text(json.dumps([{"edge": [0, 1], "colour": "1/2"}, {"edge": [2, 1], "colour": 3}]))
    colouring = load_colouring_file(path, g)
    assert colouring.colour((0,), (1,)) == Fraction(1, 2)
    assert colouring.colour((1,), (2,)) == 3
    assert colouring.to_records()[0] == {"edge": [0, 1], "colour": "1/2"}

    path.write_text(json.dumps([{"edge": [0, 1], "colour": "x"}, {"edge": [1, 2], "colour": 3}]))
    with pytest.raises(GraphFileError):
        load_colouring_file(path, g)
