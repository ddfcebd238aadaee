"""
witness 命令 - 构造并核对下界见证族
"""
import argparse

from ..core.certifier import is_chainable
from ..core.colouring import greedy_proper_colouring, product_colouring_chain, rebind
from ..core.dsl import parse_spec
from ..core.families import star_lower_bound_family, theta_lower_bound_family, tree_lower_bound_family
from ..core.graph import FamilyKind, product_of, root_tree_at_leaf
from ..exceptions import ParameterError
from ..schemas.reports import FamilyCheckReport


def register(subparsers):
    parser = subparsers.add_parser("witness", help="核对 G □ H 上的下界见证族")
    parser.add_argument("spec", help="积图描述，最后一个因子为 H")
    parser.add_argument("-r", type=int, required=True)
    parser.add_argument("--family", choices=["tree", "star", "theta"], required=True)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> FamilyCheckReport:
    graph = parse_spec(args.spec)
    if not graph.factors:
        raise ParameterError(f"{graph.ident} 没有积结构", "cli")
    built = [spec.build() for spec in graph.factors]
    base_graph, last, last_spec = product_of(built[:-1]), built[-1], graph.factors[-1]

    if is_chainable(base_graph):
        base = rebind(product_colouring_chain(built[:-1]), base_graph)
    else:
        base = greedy_proper_colouring(base_graph)

    if args.family == "tree":
        family = tree_lower_bound_family(base, root_tree_at_leaf(last), args.r)
    elif args.family == "star":
        if last_spec.kind != FamilyKind.STAR:
            raise ParameterError(f"最后一个因子 {last.ident} 不是星", "cli")
        family = star_lower_bound_family(base, last_spec.params[0], args.r)
    else:
        if last_spec.kind != FamilyKind.THETA:
            raise ParameterError(f"最后一个因子 {last.ident} 不是 θ 图", "cli")
        family = theta_lower_bound_family(base, *last_spec.params, args.r)

    report = family.verify()
    return FamilyCheckReport(
        graph=family.graph.ident,
        family=args.family,
        r=args.r,
        claimed=report.claimed,
        members=report.members,
        rank=report.rank,
        ok=report.ok,
        provenance=report.provenance,
    )
