"""
verify 命令 - 批量核对，输出 CSV 或 JSON
"""
import argparse

from ..core.verify import verify_suite


def register(subparsers):
    parser = subparsers.add_parser("verify", help="对一族实例比较 dim W、公式、构造与穷举")
    parser.add_argument("--family", choices=["paths", "stars", "thetas", "mixed"], required=True)
    parser.add_argument("--max-n", type=int, default=4, help="实例规模上限")
    parser.add_argument("-r", type=int, required=True, help="阈值")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> str:
    df = verify_suite(args.family, args.max_n, args.r)
    if args.format == "json":
        return df.to_json(orient="records")
    return df.to_csv(index=False)
