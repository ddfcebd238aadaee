"""
有理系数一元多项式与多项式向量
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from ..exceptions import GraphError
from .graph import Graph, VertexLabel

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Polynomial:
    """系数从低到高存放；零多项式的系数为空，degree 为 -1"""
    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((Fraction(c),))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], scale: Scalar = 1) -> "Polynomial":
        """scale · Π (x - a)"""
        result = cls.constant(scale)
        for a in roots:
            result = result * cls((-Fraction(a), Fraction(1)))
        return result

    @classmethod
    def bump(cls, roots: Sequence[Scalar], at: Scalar) -> "Polynomial":
        """在 roots 处为零、在 at 处取 1 的最低次多项式"""
        base = cls.from_roots(roots)
        value = base(at)
        if value == 0:
            raise ZeroDivisionError(f"{at} 是零点之一")
        return base * (1 / value)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (n - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (n - len(other.coefficients))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(tuple(c * other for c in self.coefficients))
        if not self or not other:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def padded(self, length: int) -> Tuple[Fraction, ...]:
        """补零到 length 个系数；次数超出时抛 ValueError"""
        if len(self.coefficients) > length:
            raise ValueError(f"次数 {self.degree} 超过 {length - 1}")
        return self.coefficients + (Fraction(0),) * (length - len(self.coefficients))

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            terms.append(str(c) if i == 0 else f"{c}*x^{i}" if i > 1 else f"{c}*x")
        return " + ".join(terms)


ZERO = Polynomial()


@dataclass(frozen=True)
class PolyVector:
    """(p_v)_{v∈V(G)}，未出现的顶点视为零多项式"""
    graph: Graph
    entries: Mapping[VertexLabel, Polynomial]

    @classmethod
    def build(cls, graph: Graph, entries: Mapping[VertexLabel, Polynomial]) -> "PolyVector":
        unknown = [v for v in entries if v not in graph.index]
        if unknown:
            raise GraphError(f"未知顶点 {unknown[0]}")
        return cls(graph, {v: p for v, p in entries.items() if p})

    def __getitem__(self, v: VertexLabel) -> Polynomial:
        return self.entries.get(v, ZERO)

    def support(self) -> Dict[VertexLabel, Polynomial]:
        return {v: self.entries[v] for v in self.graph.vertices if v in self.entries}

    def to_dict(self) -> Dict[str, list]:
        return {
            "|".join(str(a) for a in v): [str(c) for c in p.coefficients]
            for v, p in self.support().items()
        }
