"""
图描述语言 - path(n) | star(k) | cycle(n) | complete(n) | theta(k,l) | prod(s1, s2, ...) | file:PATH
"""
import re
from pathlib import Path
from typing import List

from ..exceptions import ParameterError, SpecParseError
from .graph import FamilyKind, Graph, load_graph_file, make_family, product_of

_NAME = re.compile(r"[a-z]+")
_INT = re.compile(r"-?\d+")
_FAMILIES = {kind.value: kind for kind in FamilyKind if kind != FamilyKind.FILE}


class _Parser:
    """递归下降解析器"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _expect(self, char: str):
        self._skip()
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            found = self.text[self.pos] if self.pos < len(self.text) else "结尾"
            raise SpecParseError(f"期望 '{char}'，遇到 {found!r}", self.pos)
        self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Graph:
        graph = self.spec()
        self._skip()
        if self.pos != len(self.text):
            raise SpecParseError(f"多余的输入 {self.text[self.pos:]!r}", self.pos)
        return graph

    def spec(self) -> Graph:
        self._skip()
        start = self.pos
        if self.text.startswith("file:", self.pos):
            self.pos += len("file:")
            end = self.pos
            while end < len(self.text) and self.text[end] not in ",)":
                end += 1
            path = self.text[self.pos:end].strip()
            if not path:
                raise SpecParseError("file: 后缺少路径", self.pos)
            self.pos = end
            return load_graph_file(Path(path))

        match = _NAME.match(self.text, self.pos)
        if not match:
            raise SpecParseError("期望图族名称", start)
        name = match.group(0)
        self.pos = match.end()
        self._expect("(")

        if name == "prod":
            factors = [self.spec()]
            while self._peek() == ",":
                self.pos += 1
                factors.append(self.spec())
            self._expect(")")
            return product_of(factors)

        if name not in _FAMILIES:
            raise SpecParseError(f"未知图族 {name!r}", start)
        args: List[int] = []
        while True:
            self._skip()
            number = _INT.match(self.text, self.pos)
            if not number:
                raise SpecParseError("期望整数参数", self.pos)
            args.append(int(number.group(0)))
            self.pos = number.end()
            if self._peek() != ",":
                break
            self.pos += 1
        self._expect(")")
        try:
            return make_family(_FAMILIES[name], *args)
        except ParameterError as e:
            raise SpecParseError(e.message, start) from None


def parse_spec(text: str) -> Graph:
    """
    解析图描述

    Examples:
        parse_spec("prod(path(2), path(4))")  # 2×4 网格
        parse_spec("theta(5,4)")
    """
    return _Parser(text).parse()
