"""
多项式空间 W^r_{G,c} - 成员判定、维数、基、Z_c 取值与零点引理
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..exceptions import ColouringError, ParameterError, WitnessError
from .colouring import EdgeColouring
from .graph import Graph, VertexLabel
from .linalg import rank, rref
from .polynomial import Polynomial, PolyVector

logger = logging.getLogger(__name__)


def _check_threshold(r: int):
    if r < 0:
        raise ParameterError(f"阈值 r 必须非负，得到 {r}", "witness-space")


def caps(graph: Graph, r: int) -> List[int]:
    """每个顶点允许的系数个数 min(r, deg v)，即次数上界加一"""
    return [max(0, min(r, graph.degree(v))) for v in graph.vertices]


def coefficient_row(vector: PolyVector, widths: Sequence[int]) -> Tuple[Fraction, ...]:
    """按规范未知量顺序 (顶点顺序，每个顶点从低次到高次) 展开系数"""
    row: List[Fraction] = []
    for v, width in zip(vector.graph.vertices, widths):
        row.extend(vector[v].padded(width))
    return tuple(row)


def coefficient_matrix(graph: Graph, r: int, vectors: Sequence[PolyVector]) -> List[Tuple[Fraction, ...]]:
    widths = caps(graph, r)
    return [coefficient_row(p, widths) for p in vectors]


def constraint_rows(colouring: EdgeColouring, r: int) -> Tuple[List[List[Fraction]], int]:
    """每条边 uv 一行：Σ a_{u,j} c^j - Σ a_{v,j} c^j = 0"""
    graph = colouring.graph
    widths = caps(graph, r)
    offsets, total = [], 0
    for w in widths:
        offsets.append(total)
        total += w
    rows = []
    for u, v in graph.edges:
        c = colouring.colour(u, v)
        row = [Fraction(0)] * total
        iu, iv = graph.index[u], graph.index[v]
        for j in range(widths[iu]):
            row[offsets[iu] + j] += c ** j
        for j in range(widths[iv]):
            row[offsets[iv] + j] -= c ** j
        rows.append(row)
    return rows, total


def membership_failures(colouring: EdgeColouring, r: int, vector: PolyVector) -> List[str]:
    """不满足 W^r 条件的原因列表，空表示 p ∈ W^r_{G,c}"""
    _check_threshold(r)
    graph = colouring.graph
    problems = []
    for v in graph.vertices:
        bound = min(r, graph.degree(v)) - 1
        if vector[v].degree > bound:
            problems.append(f"deg p_{v} = {vector[v].degree} > {bound}")
    for u, v in graph.edges:
        c = colouring.colour(u, v)
        if vector[u](c) != vector[v](c):
            problems.append(f"p_{u}({c}) ≠ p_{v}({c})")
    return problems


def w_membership(colouring: EdgeColouring, r: int, vector: PolyVector) -> bool:
    return not membership_failures(colouring, r, vector)


def dim_w(colouring: EdgeColouring, r: int) -> int:
    """
    dim W^r_{G,c} = 未知量个数 - 约束矩阵的秩

    这是 m_e(G, r) 的下界。
    """
    _check_threshold(r)
    rows, total = constraint_rows(colouring, r)
    if total == 0:
        return 0
    dim = total - rank(rows, total)
    logger.debug("dim W^%d(%s, %s) = %d", r, colouring.graph.ident, colouring.provenance, dim)
    return dim


# ============ 见证族 ============

@dataclass(frozen=True)
class WitnessMember:
    """见证族成员；X 类成员记录其 G 顶点 base"""
    vector: PolyVector
    provenance: str
    base: Optional[VertexLabel] = None


@dataclass
class FamilyReport:
    """见证族的验证结果"""
    claimed: int
    members: int
    rank: int
    membership_failures: List[str] = field(default_factory=list)
    vanishing_failures: List[str] = field(default_factory=list)
    provenance: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            not self.membership_failures
            and not self.vanishing_failures
            and self.rank == self.members == self.claimed
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claimed": self.claimed,
            "members": self.members,
            "rank": self.rank,
            "ok": self.ok,
            "membership_failures": self.membership_failures,
            "vanishing_failures": self.vanishing_failures,
            "provenance": self.provenance,
        }


@dataclass
class WitnessFamily:
    """
    W^r_{G',c'} 中声称线性无关的一组向量。
    base_colouring 为积图 G' = G □ H 时 G 上的着色 c，用于 X 类零点检查。
    """
    colouring: EdgeColouring
    r: int
    members: List[WitnessMember]
    claimed_dimension: int
    base_colouring: Optional[EdgeColouring] = None

    @property
    def graph(self) -> Graph:
        return self.colouring.graph

    def verify(self) -> FamilyReport:
        membership = []
        for m in self.members:
            for problem in membership_failures(self.colouring, self.r, m.vector):
                membership.append(f"{m.provenance}: {problem}")

        vanishing = []
        if self.base_colouring is not None:
            base = self.base_colouring
            width = base.graph.arity
            for m in self.members:
                if m.base is None:
                    continue
                roots = base.incident_colours(m.base)
                for x, p in m.vector.support().items():
                    if x[:width] != m.base:
                        vanishing.append(f"{m.provenance}: 支撑 {x} 不在 {m.base} 的拷贝上")
                        continue
                    bad = [c for c in roots if p(c) != 0]
                    if bad:
                        vanishing.append(f"{m.provenance}: p_{x}({bad[0]}) ≠ 0")

        got_rank = 0
        if not membership and self.members:
            matrix = coefficient_matrix(self.graph, self.r, [m.vector for m in self.members])
            got_rank = rank(matrix, sum(caps(self.graph, self.r)))

        return FamilyReport(
            claimed=self.claimed_dimension,
            members=len(self.members),
            rank=got_rank,
            membership_failures=membership,
            vanishing_failures=vanishing,
            provenance=dict(Counter(m.provenance.split("[")[0] for m in self.members)),
        )

    def require(self) -> FamilyReport:
        """验证失败时抛出 WitnessError (带出问题的成员来源)"""
        report = self.verify()
        if report.membership_failures:
            raise WitnessError("成员不在 W 中", report.membership_failures[0])
        if report.vanishing_failures:
            raise WitnessError("X 类成员零点条件不成立", report.vanishing_failures[0])
        if not report.ok:
            raise WitnessError(
                f"秩 {report.rank}，成员 {report.members}，声称 {report.claimed}",
                ",".join(sorted(report.provenance)),
            )
        return report


def basis_of_w(colouring: EdgeColouring, r: int) -> WitnessFamily:
    """由约束矩阵的零空间给出 W^r_{G,c} 的一组基"""
    _check_threshold(r)
    graph = colouring.graph
    rows, total = constraint_rows(colouring, r)
    widths = caps(graph, r)
    if total == 0:
        return WitnessFamily(colouring, r, [], 0)
    echelon = rref(rows, total)
    members = []
    for n, vec in enumerate(echelon.nullspace()):
        entries, offset = {}, 0
        for v, width in zip(graph.vertices, widths):
            entries[v] = Polynomial(vec[offset:offset + width])
            offset += width
        members.append(WitnessMember(PolyVector.build(graph, entries), f"B[{n}]"))
    return WitnessFamily(colouring, r, members, len(members))


# ============ Z_c ============

def z_evaluate(
    base: EdgeColouring,
    vector: PolyVector,
    z: Mapping[VertexLabel, Fraction],
) -> Tuple[Fraction, ...]:
    """
    p(z)：积图顶点 (u, h) 处取 p_{(u,h)}(z_u)

    Args:
        base: G 上的着色 c
        vector: G □ H 上的多项式向量
        z: Z_c 中的向量，z_u 是 u 处的一个关联颜色
    """
    graph = base.graph
    for u, value in z.items():
        if value not in base.incident_colours(tuple(u)):
            raise ColouringError(f"z_{u} = {value} 不是 {u} 处的颜色")
    width = graph.arity
    out = []
    for x in vector.graph.vertices:
        p = vector[x]
        u = x[:width]
        if u not in z:
            if p:
                raise ColouringError(f"z 缺少 {u} 的取值")
            out.append(Fraction(0))
            continue
        out.append(p(z[u]))
    return tuple(out)


def zeros_lemma_witness(base: EdgeColouring, vector: PolyVector, x: VertexLabel) -> Dict[VertexLabel, Fraction]:
    """
    p_x = q·Π(x-α)，q 非零且次数不超过 deg_G(u)-1，α 取积图扩展的新颜色时，
    存在 z ∈ Z_c 使 p(z) 在 x 处非零。
    依次扫描 u 处的颜色找到非零取值，其余顶点取第一个关联颜色。
    """
    graph = base.graph
    u = tuple(x[:graph.arity])
    colours = base.incident_colours(u)
    p = vector[x]
    if not p:
        raise WitnessError(f"p_{x} 为零", "zeros-lemma")
    choice = next((c for c in colours if p(c) != 0), None)
    if choice is None:
        raise WitnessError(f"p_{x} 在 {u} 的所有颜色处为零", "zeros-lemma")
    z = {w: base.incident_colours(w)[0] for w in graph.vertices if graph.degree(w) > 0}
    z[u] = choice
    return z
