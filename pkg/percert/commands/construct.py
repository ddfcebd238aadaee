"""
construct 命令 - 积图上的渗流集构造
"""
import argparse

from ..core.constructions import construct_product_chain
from ..core.dsl import parse_spec
from ..core.percolation import percolates
from ..deps import get_certifier
from ..schemas.graph import label_json
from ..schemas.reports import ConstructionReport


def register(subparsers):
    parser = subparsers.add_parser("construct", help="对积图的最后一个因子做构造")
    parser.add_argument("spec", help="积图描述，最后一个因子为路/树、星或 θ")
    parser.add_argument("-r", type=int, required=True, help="阈值")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> ConstructionReport:
    graph = parse_spec(args.spec)
    plan = construct_product_chain(graph, args.r, get_certifier().optimal_set)
    total = plan.total
    return ConstructionReport(
        graph=plan.graph.ident,
        r=args.r,
        size=len(total),
        formula_size=plan.expected,
        percolates=percolates(plan.graph, total, args.r),
        edges=[[label_json(u), label_json(v)] for u, v in total.edges(plan.graph)],
        notes=plan.notes,
    )
