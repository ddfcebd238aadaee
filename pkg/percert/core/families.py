"""
下界见证族 - 在 G □ T、G □ S_k、G □ H_{k,ℓ} 上显式构造 W 中线性无关的向量
"""
import logging
from fractions import Fraction
from typing import Dict, List, Sequence

from ..exceptions import ParameterError
from .colouring import EdgeColouring, product_colouring_star, product_colouring_theta, product_colouring_tree
from .formulas import formula_star_general, formula_theta_general, formula_tree_lower
from .graph import DegreeHistogram, RootedTree, ThetaSpec, VertexLabel
from .polynomial import Polynomial, PolyVector
from .witness import WitnessFamily, WitnessMember, basis_of_w, dim_w

logger = logging.getLogger(__name__)


def _basis(base: EdgeColouring, r: int) -> List[WitnessMember]:
    if r < 0:
        return []
    return basis_of_w(base, r).members


def _dims(base: EdgeColouring, levels: Sequence[int]) -> Dict[int, int]:
    return {i: dim_w(base, i) for i in levels if i >= 1}


def _linear(root: Fraction) -> Polynomial:
    return Polynomial.from_roots([root])


def tree_lower_bound_family(base: EdgeColouring, tree: RootedTree, r: int) -> WitnessFamily:
    """
    W^r_{G□T,c'} 中的线性无关族：
      A_0   G 的 W^r 基复制到每个拷贝
      A_ℓ   (x-α_ℓ)·q 放在子树 T_ℓ 的拷贝上，q 取自 W^{r-1} 的基
      X^0   deg_G(v) ≤ r-1：Π(x-c_uv) 放在 v 的所有拷贝
      X^i   deg_G(v) ≤ r-2，deg_T(i) ≥ 2：v_i 处 (x-α_i)Π，子树 T_j 上 (α_j-α_i)Π
    """
    if r < 1:
        raise ParameterError(f"需要 r ≥ 1，得到 {r}", "witness-space")
    colouring = product_colouring_tree(base, tree)
    product, alpha, graph = colouring.graph, colouring.fresh, base.graph

    def at(v: VertexLabel, i: int) -> VertexLabel:
        return v + tree.order[i]

    members: List[WitnessMember] = []
    for n, q in enumerate(_basis(base, r)):
        entries = {at(v, i): q.vector[v] for v in graph.vertices for i in range(tree.n)}
        members.append(WitnessMember(PolyVector.build(product, entries), f"A_0[{n}]"))

    lower = _basis(base, r - 1)
    for l in range(1, tree.n):
        factor = _linear(alpha[l])
        subtree = tree.subtree(l)
        for n, q in enumerate(lower):
            entries = {at(v, i): factor * q.vector[v] for v in graph.vertices for i in subtree}
            members.append(WitnessMember(PolyVector.build(product, entries), f"A_{l}[{n}]"))

    for v in graph.vertices:
        d = graph.degree(v)
        pi = Polynomial.from_roots(base.incident_colours(v))
        if d <= r - 1:
            entries = {at(v, i): pi for i in range(tree.n)}
            members.append(WitnessMember(PolyVector.build(product, entries), f"X^0[{v}]", v))
        if d <= r - 2:
            for i in range(tree.n):
                if tree.degree(i) < 2:
                    continue
                entries = {at(v, i): pi * _linear(alpha[i])}
                for j in tree.children[i]:
                    scaled = pi * (alpha[j] - alpha[i])
                    for l in tree.subtree(j):
                        entries[at(v, l)] = scaled
                members.append(WitnessMember(PolyVector.build(product, entries), f"X^{i}[{v}]", v))

    claimed = formula_tree_lower(_dims(base, (r, r - 1)), DegreeHistogram.of(graph), tree.histogram(), r).value
    family = WitnessFamily(colouring, r, members, claimed, base_colouring=base)
    report = family.require()
    logger.debug("树见证族: %s, 秩 %d", product.ident, report.rank)
    return family


def star_lower_bound_family(base: EdgeColouring, k: int, r: int) -> WitnessFamily:
    """
    W^r_{G□S_k,c'} 中的线性无关族：
      A_0   W^r 基复制到所有拷贝；A_ℓ 为拷贝 ℓ 上的 (x-α_ℓ)q
      X_0   deg_G(v) ≤ r-k：边 v_0 v_ℓ 两端的插值多项式
      X_t   deg_G(v) = r-t (1 ≤ t ≤ k-1)，ℓ ∈ [t]
    """
    if k < 1 or r < 1:
        raise ParameterError(f"需要 k, r ≥ 1，得到 k={k}, r={r}", "witness-space")
    colouring = product_colouring_star(base, k)
    product, alpha, graph = colouring.graph, colouring.fresh, base.graph

    def at(v: VertexLabel, i: int) -> VertexLabel:
        return v + (i,)

    members: List[WitnessMember] = []
    for n, q in enumerate(_basis(base, r)):
        entries = {at(v, i): q.vector[v] for v in graph.vertices for i in range(k + 1)}
        members.append(WitnessMember(PolyVector.build(product, entries), f"A_0[{n}]"))
    for l in range(1, k + 1):
        for n, q in enumerate(_basis(base, r - 1)):
            entries = {at(v, l): _linear(alpha[l]) * q.vector[v] for v in graph.vertices}
            members.append(WitnessMember(PolyVector.build(product, entries), f"A_{l}[{n}]"))

    for v in graph.vertices:
        d = graph.degree(v)
        colours = base.incident_colours(v)
        pi = Polynomial.from_roots(colours)
        if d <= r - k:
            for l in range(1, k + 1):
                others = [alpha[i] for i in range(1, k + 1) if i != l]
                entries = {
                    at(v, 0): Polynomial.bump(colours + others, alpha[l]),
                    at(v, l): Polynomial.bump(colours, alpha[l]),
                }
                members.append(WitnessMember(PolyVector.build(product, entries), f"X_0^{l}[{v}]", v))
        for t in range(1, k):
            if d != r - t:
                continue
            for l in range(1, t + 1):
                centre = pi * Polynomial.from_roots([alpha[i] for i in range(1, t + 1) if i != l])
                entries = {at(v, 0): centre}
                for j in [l] + list(range(t + 1, k + 1)):
                    entries[at(v, j)] = pi * (centre(alpha[j]) / pi(alpha[j]))
                members.append(WitnessMember(PolyVector.build(product, entries), f"X_{t}^{l}[{v}]", v))

    claimed = formula_star_general(_dims(base, (r, r - 1)), DegreeHistogram.of(graph), k, r).value
    family = WitnessFamily(colouring, r, members, claimed, base_colouring=base)
    report = family.require()
    logger.debug("星见证族: %s, 秩 %d", product.ident, report.rank)
    return family


def theta_lower_bound_family(base: EdgeColouring, k: int, l: int, r: int) -> WitnessFamily:
    """
    W^r_{G□H_{k,ℓ},c'} 中的线性无关族 (k ≥ ℓ ≥ 4, r ≥ 2)：
      A_1                W^r 基复制到所有拷贝
      A_i (i ≠ 1,2,ℓ,k') 边 (i, i+1) 两端的线性因子乘 W^{r-1} 基
      A_2                顶点 2、3、3' 上的三项
      A_ℓ, A_k'          (x-α_{i-1})(x-α_i)·q，q 取自 W^{r-2} 基
      X_1 / X_2 / X_3    按 deg_G(v) = r-1 / r-2 / ≤ r-3 分类
    """
    if r < 2:
        raise ParameterError(f"需要 r ≥ 2，得到 {r}", "witness-space")
    spec = ThetaSpec(k, l)
    colouring = product_colouring_theta(base, k, l)
    product, a, graph = colouring.graph, colouring.fresh, base.graph
    theta_vertices = spec.vertices()
    ends = {"1", "2", str(l), f"{k}'"}
    inner = [i for i in theta_vertices if i not in ends]
    local: Dict[str, List[Fraction]] = {tok: [] for tok in theta_vertices}
    for x, y, tok in spec.edges():
        local[x].append(a[tok])
        local[y].append(a[tok])

    def at(v: VertexLabel, tok: str) -> VertexLabel:
        return v + (spec.vertex(tok),)

    def edge_bump(colours: List[Fraction], tok: str, value: Fraction) -> Polynomial:
        """在 tok 所在的 H 顶点上：除 value 外所有关联颜色处为零，value 处为 1"""
        return Polynomial.bump(colours + [c for c in local[spec.vertex(tok)] if c != value], value)

    members: List[WitnessMember] = []
    for n, q in enumerate(_basis(base, r)):
        entries = {at(v, tok): q.vector[v] for v in graph.vertices for tok in theta_vertices}
        members.append(WitnessMember(PolyVector.build(product, entries), f"A_1[{n}]"))

    lower = _basis(base, r - 1)
    for i in inner:
        prv, nxt = spec.prev_token(i), spec.next_token(i)
        left = _linear(a[prv]) * (1 / (a[i] - a[prv]))
        right = _linear(a[nxt]) * (1 / (a[i] - a[nxt]))
        for n, q in enumerate(lower):
            entries = {}
            for v in graph.vertices:
                entries[at(v, i)] = left * q.vector[v]
                entries[at(v, nxt)] = right * q.vector[v]
            members.append(WitnessMember(PolyVector.build(product, entries), f"A_{i}[{n}]"))

    a1, a2, a2p, a3, a3p = a["1"], a["2"], a["2'"], a["3"], a["3'"]
    for n, q in enumerate(lower):
        entries = {}
        for v in graph.vertices:
            entries[at(v, "3")] = _linear(a3) * (1 / ((a2 - a3) * (a2p - a1))) * q.vector[v]
            entries[at(v, "2")] = _linear(a1) * (1 / ((a2 - a1) * (a2p - a1))) * q.vector[v]
            entries[at(v, "3'")] = _linear(a3p) * (1 / ((a2 - a1) * (a2p - a3p))) * q.vector[v]
        members.append(WitnessMember(PolyVector.build(product, entries), f"A_2[{n}]"))

    for end in (str(l), f"{k}'"):
        factor = Polynomial.from_roots([a[spec.prev_token(end)], a[end]])
        for n, q in enumerate(_basis(base, r - 2)):
            entries = {at(v, end): factor * q.vector[v] for v in graph.vertices}
            members.append(WitnessMember(PolyVector.build(product, entries), f"A_{end}[{n}]"))

    kp, km1p, lm1 = f"{k}'", f"{k - 1}'", str(l - 1)
    for v in graph.vertices:
        d = graph.degree(v)
        colours = base.incident_colours(v)
        pi = Polynomial.from_roots(colours)
        if d == r - 1:
            entries = {at(v, tok): pi for tok in theta_vertices}
            members.append(WitnessMember(PolyVector.build(product, entries), f"X_1[{v}]", v))
        elif d == r - 2:
            for i in inner:
                nxt = spec.next_token(i)
                entries = {at(v, i): edge_bump(colours, i, a[i]), at(v, nxt): edge_bump(colours, nxt, a[i])}
                members.append(WitnessMember(PolyVector.build(product, entries), f"X_2^{i}[{v}]", v))

            p2 = pi * _linear(a1)
            entries = {
                at(v, "2"): p2,
                at(v, "3"): Polynomial.bump(colours + [a3], a2) * p2(a2),
                at(v, "3'"): Polynomial.bump(colours + [a3p], a2p) * p2(a2p),
            }
            members.append(WitnessMember(PolyVector.build(product, entries), f"X_2^2[{v}]", v))

            p1 = pi * _linear(a1)
            entries = {
                at(v, "1"): p1,
                at(v, str(l)): Polynomial.bump(colours + [a[lm1]], a[str(l)]) * p1(a[str(l)]),
                at(v, kp): Polynomial.bump(colours + [a[km1p]], a[kp]) * p1(a[kp]),
            }
            members.append(WitnessMember(PolyVector.build(product, entries), f"X_2^1[{v}]", v))

            q1 = pi * _linear(a[str(l)]) * (1 / (a1 - a[str(l)]))
            q2 = pi * _linear(a2) * (1 / (a1 - a2))
            entries = {
                at(v, "1"): q1,
                at(v, "2"): q2,
                at(v, "3'"): Polynomial.bump(colours + [a3p], a2p) * q2(a2p),
                at(v, kp): Polynomial.bump(colours + [a[km1p]], a[kp]) * q1(a[kp]),
            }
            members.append(WitnessMember(PolyVector.build(product, entries), f"X_2^0[{v}]", v))
        elif d <= r - 3:
            for tok in spec.alpha_tokens():
                x, y = spec.edge_token(tok)
                entries = {at(v, x): edge_bump(colours, x, a[tok]), at(v, y): edge_bump(colours, y, a[tok])}
                members.append(WitnessMember(PolyVector.build(product, entries), f"X_3^{tok}[{v}]", v))

    claimed = formula_theta_general(_dims(base, (r, r - 1, r - 2)), DegreeHistogram.of(graph), k, l, r).value
    family = WitnessFamily(colouring, r, members, claimed, base_colouring=base)
    report = family.require()
    logger.debug("θ 见证族: %s, 秩 %d", product.ident, report.rank)
    return family
