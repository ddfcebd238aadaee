"""
精确线性代数 - 基于 sympy DomainMatrix (QQ) 的秩、简化行阶梯形与零空间
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


@dataclass(frozen=True)
class RowEchelon:
    """简化行阶梯形：非零行与主元列"""
    rows: Tuple[Tuple[Fraction, ...], ...]
    pivots: Tuple[int, ...]
    columns: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self) -> List[Tuple[Fraction, ...]]:
        """零空间的基：每个自由列一个向量，自由变量取 1"""
        pivot_set = set(self.pivots)
        basis = []
        for free in range(self.columns):
            if free in pivot_set:
                continue
            vec = [Fraction(0)] * self.columns
            vec[free] = Fraction(1)
            for row, pivot in zip(self.rows, self.pivots):
                vec[pivot] = -row[free]
            basis.append(tuple(vec))
        return basis


def _to_domain(rows: Sequence[Sequence[Fraction]], columns: int) -> DomainMatrix:
    data = [[QQ(int(Fraction(x).numerator), int(Fraction(x).denominator)) for x in row] for row in rows]
    return DomainMatrix(data, (len(data), columns), QQ)


def rref(rows: Sequence[Sequence[Fraction]], columns: int) -> RowEchelon:
    """
    精确消元

    Args:
        rows: 矩阵的行 (每行长度为 columns)
        columns: 列数 (允许零行矩阵)
    """
    if not rows or columns == 0:
        return RowEchelon((), (), columns)
    reduced, pivots = _to_domain(rows, columns).rref()
    matrix = reduced.to_Matrix()
    out = []
    for i in range(len(pivots)):
        out.append(tuple(Fraction(int(x.p), int(x.q)) for x in matrix.row(i)))
    return RowEchelon(tuple(out), tuple(pivots), columns)


def rank(rows: Sequence[Sequence[Fraction]], columns: int) -> int:
    return rref(rows, columns).rank
