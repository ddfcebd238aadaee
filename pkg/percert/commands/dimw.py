"""
dimw 命令 - 计算 dim W^r_{G,c}
"""
import argparse
from pathlib import Path

from ..core.certifier import is_chainable
from ..core.colouring import greedy_proper_colouring, load_colouring_file, product_colouring_chain, rebind
from ..core.dsl import parse_spec
from ..core.witness import basis_of_w, dim_w
from ..exceptions import ParameterError
from ..schemas.reports import DimWReport


def register(subparsers):
    parser = subparsers.add_parser("dimw", help="计算 dim W^r_{G,c}")
    parser.add_argument("spec", help="图描述")
    parser.add_argument("-r", type=int, required=True, help="阈值")
    parser.add_argument("--colouring", default="greedy", help="greedy | product | file:PATH")
    parser.add_argument("--basis", action="store_true", help="同时输出一组基")
    parser.add_argument("--dump-colouring", action="store_true", help="输出所用着色")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> DimWReport:
    graph = parse_spec(args.spec)
    if args.colouring == "greedy":
        colouring = greedy_proper_colouring(graph)
    elif args.colouring == "product":
        if not is_chainable(graph):
            raise ParameterError(f"{graph.ident} 不是路/树、星、θ 的积", "cli")
        colouring = rebind(product_colouring_chain([spec.build() for spec in graph.factors]), graph)
    elif args.colouring.startswith("file:"):
        colouring = load_colouring_file(Path(args.colouring[len("file:"):]), graph)
    else:
        raise ParameterError(f"未知着色 {args.colouring!r}", "cli")

    report = DimWReport(graph=graph.ident, r=args.r, colouring=colouring.provenance, dim=dim_w(colouring, args.r))
    if args.basis:
        report.basis = [m.vector.to_dict() for m in basis_of_w(colouring, args.r).members]
    if args.dump_colouring:
        report.colours = colouring.to_records()
    return report
