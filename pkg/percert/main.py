"""
percert - 命令行入口
"""
import argparse
import logging
import sys
from typing import List, Optional, Tuple

from pydantic import BaseModel

from . import __version__
from .commands import COMMANDS
from .config import get_settings
from .exceptions import ParameterError, PercertError
from .schemas.reports import ErrorReport

logger = logging.getLogger("percert")

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USER = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="percert",
        description="图的 r-键自举渗流：m_e(G, r) 的计算、下界与构造",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    # 注册子命令
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def configure_logging(level: str):
    """日志写到 stderr，stdout 只输出结果"""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    logger.handlers[:] = [handler]
    logger.setLevel(level.upper())
    logger.propagate = False


def _error_text(error: PercertError, indent: int) -> str:
    return ErrorReport(error=error.to_dict()).model_dump_json(indent=indent)


def run(argv: Optional[List[str]] = None) -> Tuple[int, str]:
    """
    执行一条命令

    Returns:
        (退出码, 输出文本)
    """
    settings = get_settings()
    configure_logging(settings.log_level)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.r < 0:
        return EXIT_USER, _error_text(ParameterError(f"阈值 r 必须非负，得到 {args.r}", "cli"), settings.output_indent)

    try:
        result = args.handler(args)
    except PercertError as e:
        logger.info("命令失败: %s", e.message)
        return EXIT_USER, _error_text(e, settings.output_indent)
    except Exception as e:  # noqa: BLE001
        logger.exception("内部错误")
        error = PercertError(f"{type(e).__name__}: {e}", "internal")
        return EXIT_INTERNAL, _error_text(error, settings.output_indent)

    if isinstance(result, BaseModel):
        return EXIT_OK, result.model_dump_json(indent=settings.output_indent)
    return EXIT_OK, result


def main():
    status, text = run()
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    sys.exit(status)


if __name__ == "__main__":
    main()
