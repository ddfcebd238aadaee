"""
percolate 命令 - 输出闭包过程
"""
import argparse
import json
from pathlib import Path

from ..core.dsl import parse_spec
from ..core.percolation import EdgeSet, closure
from ..exceptions import GraphFileError
from ..schemas.graph import label_json, label_tuple
from ..schemas.reports import PercolationReport


def register(subparsers):
    parser = subparsers.add_parser("percolate", help="从给定边集出发做 r-键自举渗流")
    parser.add_argument("spec", help="图描述")
    parser.add_argument("-r", type=int, required=True, help="阈值")
    parser.add_argument("--seed-edges", required=True, help="JSON 文件 [[u, v], ...]")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> PercolationReport:
    graph = parse_spec(args.spec)
    try:
        raw = json.loads(Path(args.seed_edges).read_text(encoding="utf-8"))
        pairs = [(label_tuple(u), label_tuple(v)) for u, v in raw]
    except FileNotFoundError:
        raise GraphFileError(f"找不到边集文件 {args.seed_edges}") from None
    except (ValueError, TypeError) as e:
        raise GraphFileError(f"边集文件格式错误: {e}") from None

    trace = closure(graph, EdgeSet.from_edges(graph, pairs), args.r)
    return PercolationReport(
        graph=graph.ident,
        r=args.r,
        initial=len(trace.initial),
        rounds=[[[label_json(u), label_json(v)] for u, v in step.edges(graph)] for step in trace.rounds],
        final=len(trace.final),
        percolates=len(trace.final) == graph.size,
    )
