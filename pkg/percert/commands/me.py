"""
me 命令 - 计算并证明 m_e(G, r)
"""
import argparse

from ..core.certifier import Strategy
from ..core.dsl import parse_spec
from ..deps import get_certifier
from ..schemas.graph import label_json
from ..schemas.reports import CertificateReport


def register(subparsers):
    parser = subparsers.add_parser("me", help="计算 m_e(G, r)")
    parser.add_argument("spec", help="图描述，如 prod(path(2),path(4))")
    parser.add_argument("-r", type=int, required=True, help="阈值")
    parser.add_argument("--certify", action="store_true", help="输出完整证书 (着色来源与见证集)")
    parser.add_argument("--max-bruteforce", type=int, default=None, help="穷举的边数上限")
    parser.add_argument(
        "--strategy", choices=[s.value for s in Strategy], default=Strategy.AUTO.value, help="上界策略"
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> CertificateReport:
    graph = parse_spec(args.spec)
    cert = get_certifier().certify(graph, args.r, Strategy(args.strategy), cap=args.max_bruteforce)
    report = CertificateReport(
        graph=graph.ident,
        r=args.r,
        value=cert.value,
        status=cert.status.value,
        lower=cert.lower,
        upper=cert.upper,
    )
    if args.certify:
        report.lower_colouring = cert.lower_provenance
        report.upper_source = cert.upper_provenance
        report.witness = [[label_json(u), label_json(v)] for u, v in cert.witness.edges(graph)]
    return report
