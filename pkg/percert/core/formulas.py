"""
公式模块 - 树、路、星、θ 积图的上下界与精确值，以及递归积公式
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..exceptions import HypothesisError, ParameterError
from .graph import DegreeHistogram


class FormulaKind(Enum):
    """公式结果的性质"""
    EXACT = "exact"
    UPPER = "upper-bound"
    LOWER = "lower-bound"


@dataclass(frozen=True)
class Hypothesis:
    """
    由证书模块给出的假设凭据：在 levels 中的每个阈值 i 上
    m_e(G, i) = dim W^i_{G,c} 已被验证。
    """
    levels: Tuple[int, ...]
    provenance: str = ""

    @property
    def statement(self) -> str:
        levels = ",".join(str(i) for i in sorted(self.levels))
        return f"m_e(G,i)=dim W^i_(G,c) for i in {{{levels}}}" + (f" ({self.provenance})" if self.provenance else "")

    def covers(self, needed: Sequence[int]) -> bool:
        return all(i <= 0 or i in self.levels for i in needed)


@dataclass(frozen=True)
class FormulaResult:
    """公式求值结果"""
    value: int
    kind: FormulaKind
    name: str
    hypothesis: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "value": self.value,
            "kind": self.kind.value,
            "hypothesis": self.hypothesis,
        }


PRODUCT_HYPOTHESIS = "product colouring chain from K_1"


def _m(values: Mapping[int, int], r: int) -> int:
    """m_e(G, r') 在 r' ≤ 0 时为 0"""
    if r <= 0:
        return 0
    try:
        return int(values[r])
    except KeyError:
        raise ParameterError(f"缺少 r={r} 处的取值", "formulas") from None


def _kind(hypothesis: Optional[Hypothesis], needed: Sequence[int]) -> Tuple[FormulaKind, Optional[str]]:
    if hypothesis is not None and hypothesis.covers(needed):
        return FormulaKind.EXACT, hypothesis.statement
    return FormulaKind.UPPER, None


# ============ 树 ============

def _tree_upper_extra(hist_g: DegreeHistogram, hist_t: DegreeHistogram, r: int) -> int:
    top = hist_t.max_degree
    total = hist_g[r - 1]
    for t in range(1, r):
        inner = 1
        inner += t * sum(hist_t[i] for i in range(t + 1, top + 1))
        inner += sum((i - 1) * hist_t[i] for i in range(2, t + 1))
        total += hist_g[r - 1 - t] * inner
    return total


def _tree_lower_extra(hist_g: DegreeHistogram, hist_t: DegreeHistogram, r: int) -> int:
    branching = sum(hist_t[i] for i in range(2, hist_t.max_degree + 1))
    return hist_g[r - 1] + sum(hist_g[t] for t in range(0, r - 1)) * (1 + branching)


def _check_tree(hist_t: DegreeHistogram, r: int) -> int:
    n = hist_t.vertices
    if n < 2:
        raise ParameterError(f"树至少要有两个顶点，得到 n={n}", "formulas")
    if r < 1:
        raise ParameterError(f"需要 r ≥ 1，得到 {r}", "formulas")
    return n


def formula_tree_upper(me: Mapping[int, int], hist_g: DegreeHistogram, hist_t: DegreeHistogram, r: int) -> FormulaResult:
    """G □ T 的构造上界"""
    n = _check_tree(hist_t, r)
    value = _m(me, r) + (n - 1) * _m(me, r - 1) + _tree_upper_extra(hist_g, hist_t, r)
    return FormulaResult(value, FormulaKind.UPPER, "tree-upper")


def formula_tree_lower(dims: Mapping[int, int], hist_g: DegreeHistogram, hist_t: DegreeHistogram, r: int) -> FormulaResult:
    """G □ T 的多项式下界"""
    n = _check_tree(hist_t, r)
    value = _m(dims, r) + (n - 1) * _m(dims, r - 1) + _tree_lower_extra(hist_g, hist_t, r)
    return FormulaResult(value, FormulaKind.LOWER, "tree-lower")


def bounds_match_predicate(hist_g: DegreeHistogram, hist_t: DegreeHistogram, r: int) -> bool:
    """在 m_e = dim W 时，树的上下界是否重合 (只比较依赖度分布的部分)"""
    if r < 1:
        return True
    return _tree_upper_extra(hist_g, hist_t, r) == _tree_lower_extra(hist_g, hist_t, r)


def formula_tree_exact(
    me: Mapping[int, int],
    hist_g: DegreeHistogram,
    hist_t: DegreeHistogram,
    r: int,
    hypothesis: Optional[Hypothesis],
) -> FormulaResult:
    """
    T 为路或 δ(G) ≥ r-2，且 m_e(G,i) = dim W (i = r-1, r) 时的精确值

    Raises:
        HypothesisError: 前提不成立
    """
    n = _check_tree(hist_t, r)
    if not (hist_t.max_degree <= 2 or hist_g.min_degree >= r - 2):
        raise HypothesisError(f"T 不是路且 δ(G)={hist_g.min_degree} < r-2={r - 2}")
    if hypothesis is None or not hypothesis.covers((r - 1, r)):
        raise HypothesisError("缺少 i ∈ {r-1, r} 上的 m_e = dim W 凭据")
    value = _m(me, r) + (n - 1) * _m(me, r - 1) + _tree_lower_extra(hist_g, hist_t, r)
    return FormulaResult(value, FormulaKind.EXACT, "tree-exact", hypothesis.statement)


def formula_path_corollary(
    me: Mapping[int, int],
    hist_g: DegreeHistogram,
    n: int,
    r: int,
    hypothesis: Optional[Hypothesis] = None,
) -> FormulaResult:
    """G □ P_n"""
    if n < 2:
        raise ParameterError(f"路至少要有两个顶点，得到 n={n}", "formulas")
    if r < 1:
        raise ParameterError(f"需要 r ≥ 1，得到 {r}", "formulas")
    value = (
        _m(me, r)
        + (n - 1) * _m(me, r - 1)
        + hist_g[r - 1]
        + (n - 1) * sum(hist_g[t] for t in range(0, r - 1))
    )
    kind, statement = _kind(hypothesis, (r - 1, r))
    return FormulaResult(value, kind, "path", statement)


# ============ 星 ============

def formula_star_general(
    me: Mapping[int, int],
    hist_g: DegreeHistogram,
    k: int,
    r: int,
    hypothesis: Optional[Hypothesis] = None,
) -> FormulaResult:
    """G □ S_k"""
    if k < 1 or r < 1:
        raise ParameterError(f"需要 k, r ≥ 1，得到 k={k}, r={r}", "formulas")
    value = (
        _m(me, r)
        + k * _m(me, r - 1)
        + sum(t * hist_g[r - t] for t in range(1, k))
        + k * sum(hist_g[r - t] for t in range(k, r + 1))
    )
    kind, statement = _kind(hypothesis, (r - 1, r))
    return FormulaResult(value, kind, "star", statement)


# ============ θ ============

def formula_theta_general(
    me: Mapping[int, int],
    hist_g: DegreeHistogram,
    k: int,
    l: int,
    r: int,
    hypothesis: Optional[Hypothesis] = None,
) -> FormulaResult:
    """G □ H_{k,ℓ}"""
    if not k >= l >= 4:
        raise ParameterError(f"需要 k ≥ ℓ ≥ 4，得到 k={k}, ℓ={l}", "formulas")
    if r < 2:
        raise ParameterError(f"需要 r ≥ 2，得到 {r}", "formulas")
    value = (
        _m(me, r)
        + (k + l - 5) * _m(me, r - 1)
        + 2 * _m(me, r - 2)
        + hist_g[r - 1]
        + (k + l - 3) * hist_g[r - 2]
        + (k + l - 1) * sum(hist_g[i] for i in range(0, r - 2))
    )
    kind, statement = _kind(hypothesis, (r - 2, r - 1, r))
    return FormulaResult(value, kind, "theta", statement)


# ============ 递归积 ============

def step_histogram(step: Tuple) -> DegreeHistogram:
    """单个因子的度分布 (不构造图)"""
    kind = step[0]
    if kind == "path":
        n = step[1]
        return DegreeHistogram.from_mapping({1: 2, 2: n - 2} if n > 2 else {1: 2})
    if kind == "star":
        k = step[1]
        return DegreeHistogram.from_mapping({k: 1, 1: k} if k > 1 else {1: 2})
    if kind == "theta":
        k, l = step[1], step[2]
        return DegreeHistogram.from_mapping({3: 2, 2: k + l - 4})
    raise ParameterError(f"未知的积因子 {kind}", "formulas")


def _validate_step(step: Tuple):
    kind = step[0]
    if kind == "path" and step[1] < 2:
        raise ParameterError(f"路因子需要 n ≥ 2，得到 {step[1]}", "formulas")
    if kind == "star" and step[1] < 1:
        raise ParameterError(f"星因子需要 k ≥ 1，得到 {step[1]}", "formulas")
    if kind == "theta" and not step[1] >= step[2] >= 4:
        raise ParameterError(f"θ 因子需要 k ≥ ℓ ≥ 4，得到 {step[1:]}", "formulas")
    if kind not in ("path", "star", "theta"):
        raise ParameterError(f"未知的积因子 {kind}", "formulas")


def product_chain_table(steps: Sequence[Tuple], r: int) -> List[Dict[int, int]]:
    """
    从 K_1 出发逐个因子递推 m_e(G_t, r')，r' = 0..r

    Args:
        steps: ("path", n) / ("star", k) / ("theta", k, ℓ) 的序列
        r: 最大阈值

    Returns:
        每个部分积的取值表，第 0 项为 K_1
    """
    if r < 0:
        raise ParameterError(f"阈值 r 必须非负，得到 {r}", "formulas")
    for step in steps:
        _validate_step(step)

    table = {i: 0 for i in range(r + 1)}
    hist = DegreeHistogram((1,))
    tables = [table]
    for step in steps:
        current: Dict[int, int] = {0: 0}
        for i in range(1, r + 1):
            if i == 1:
                current[i] = 1
            elif step[0] == "path":
                current[i] = formula_path_corollary(table, hist, step[1], i).value
            elif step[0] == "star":
                current[i] = formula_star_general(table, hist, step[1], i).value
            else:
                current[i] = formula_theta_general(table, hist, step[1], step[2], i).value
        table = current
        hist = hist.convolve(step_histogram(step))
        tables.append(table)
    return tables


def formula_product_chain(steps: Sequence[Tuple], r: int) -> FormulaResult:
    """路、星、θ 因子的混合积；递归着色保证每一步上下界重合"""
    value = product_chain_table(steps, r)[-1][r] if r > 0 else 0
    return FormulaResult(value, FormulaKind.EXACT, "product-chain", PRODUCT_HYPOTHESIS)


def formula_star_product(a: Sequence[int], r: int) -> FormulaResult:
    """S_{a_1} □ ... □ S_{a_k}"""
    if r < 1 or any(x < 1 for x in a):
        raise ParameterError(f"需要 r ≥ 1 且 a_i ≥ 1，得到 a={list(a)}, r={r}", "formulas")
    result = formula_product_chain([("star", x) for x in a], r)
    return FormulaResult(result.value, result.kind, "star-product", result.hypothesis)


def formula_theta_product(pairs: Sequence[Tuple[int, int]], r: int) -> FormulaResult:
    """H_{k_1,ℓ_1} □ ... □ H_{k_t,ℓ_t}"""
    if r < 2:
        raise ParameterError(f"需要 r > 1，得到 {r}", "formulas")
    result = formula_product_chain([("theta", k, l) for k, l in pairs], r)
    return FormulaResult(result.value, result.kind, "theta-product", result.hypothesis)
