"""
formula 命令 - 公式求值
"""
import argparse
from typing import List, Tuple

from ..core.certifier import CertStatus
from ..core.dsl import parse_spec
from ..core.formulas import (
    formula_product_chain,
    formula_star_product,
    formula_theta_product,
    formula_tree_exact,
    formula_tree_lower,
    formula_tree_upper,
)
from ..core.graph import DegreeHistogram, root_tree_at_leaf
from ..core.verify import formula_steps
from ..deps import get_certifier
from ..exceptions import BoundedOnlyError, HypothesisError, ParameterError
from ..schemas.reports import FormulaReport


def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParameterError(f"无法解析整数列表 {text!r}", "cli") from None


def _pairs(text: str) -> List[Tuple[int, int]]:
    try:
        return [tuple(int(y) for y in x.split(":")) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParameterError(f"无法解析 k:ℓ 列表 {text!r}", "cli") from None


def register(subparsers):
    parser = subparsers.add_parser("formula", help="公式求值")
    kinds = parser.add_subparsers(dest="formula_kind", required=True)

    stars = kinds.add_parser("stars", help="星的积")
    stars.add_argument("--a", required=True, help="星的叶数，逗号分隔")
    stars.add_argument("-r", type=int, required=True)
    stars.set_defaults(handler=handle_stars)

    theta = kinds.add_parser("theta", help="θ 图的积")
    theta.add_argument("--pairs", required=True, help="k:ℓ 对，逗号分隔")
    theta.add_argument("-r", type=int, required=True)
    theta.set_defaults(handler=handle_theta)

    tree = kinds.add_parser("tree-product", help="G □ T 的上下界与精确值")
    tree.add_argument("graph", help="G 的描述")
    tree.add_argument("tree", help="T 的描述")
    tree.add_argument("-r", type=int, required=True)
    tree.set_defaults(handler=handle_tree)

    chain = kinds.add_parser("chain", help="路、星、θ 因子的混合积")
    chain.add_argument("spec", help="积图描述")
    chain.add_argument("-r", type=int, required=True)
    chain.set_defaults(handler=handle_chain)


def handle_stars(args: argparse.Namespace) -> FormulaReport:
    return FormulaReport(results=[formula_star_product(_ints(args.a), args.r).to_dict()])


def handle_theta(args: argparse.Namespace) -> FormulaReport:
    return FormulaReport(results=[formula_theta_product(_pairs(args.pairs), args.r).to_dict()])


def handle_chain(args: argparse.Namespace) -> FormulaReport:
    graph = parse_spec(args.spec)
    steps = formula_steps(graph)
    if steps is None:
        raise ParameterError(f"{graph.ident} 不是路、星、θ 的积", "cli")
    return FormulaReport(results=[formula_product_chain(steps, args.r).to_dict()])


def handle_tree(args: argparse.Namespace) -> FormulaReport:
    graph, tree = parse_spec(args.graph), root_tree_at_leaf(parse_spec(args.tree))
    r = args.r
    certifier = get_certifier()
    me, dims = {}, {}
    for i in (r, r - 1):
        if i <= 0:
            continue
        cert = certifier.certify(graph, i)
        if cert.status == CertStatus.BOUNDED:
            raise BoundedOnlyError(graph.ident, i, cert.lower, cert.upper)
        me[i], dims[i] = cert.upper, cert.lower

    hist_g, hist_t = DegreeHistogram.of(graph), tree.histogram()
    results = [
        formula_tree_upper(me, hist_g, hist_t, r).to_dict(),
        formula_tree_lower(dims, hist_g, hist_t, r).to_dict(),
    ]
    try:
        exact = formula_tree_exact(me, hist_g, hist_t, r, certifier.hypothesis(graph, (r - 1, r)))
        results.append(exact.to_dict())
    except HypothesisError as e:
        results.append({"name": "tree-exact", "value": None, "kind": "refused", "hypothesis": e.message})
    return FormulaReport(results=results)
