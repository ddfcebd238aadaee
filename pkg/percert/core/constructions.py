"""
构造模块 - 由 G 的最优渗流集拼出 G □ T / G □ S_k / G □ H_{k,ℓ} 的渗流集
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Tuple

from ..exceptions import ConstructionError, ParameterError
from .colouring import chain_step_kind
from .formulas import formula_star_general, formula_theta_general, formula_tree_upper
from .graph import (
    DegreeHistogram,
    FamilyKind,
    Graph,
    RootedTree,
    ThetaSpec,
    VertexLabel,
    cartesian_product,
    make_family,
    product_of,
    root_tree_at_leaf,
)
from .percolation import EdgeSet, percolates

logger = logging.getLogger(__name__)

# (G, r') -> G 在 r' 下的最优渗流集；r' ≤ 0 时应为空集
OptimalSetSupplier = Callable[[Graph, int], EdgeSet]


@dataclass
class ConstructionPlan:
    """构造结果：各拷贝上的最优集与跨拷贝的修补边"""
    graph: Graph
    r: int
    base_sets: Dict[Hashable, EdgeSet]
    repair: EdgeSet
    expected: int
    notes: List[str] = field(default_factory=list)

    @property
    def total(self) -> EdgeSet:
        mask = self.repair.mask
        for s in self.base_sets.values():
            mask |= s.mask
        return EdgeSet(mask)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph": self.graph.ident,
            "r": self.r,
            "size": len(self.total),
            "expected": self.expected,
            "copies": {str(key): len(s) for key, s in self.base_sets.items()},
            "repair": len(self.repair),
        }


def _supplied(opt: OptimalSetSupplier, graph: Graph, r: int) -> EdgeSet:
    if r <= 0 or graph.size == 0:
        return EdgeSet()
    result = opt(graph, r)
    if not percolates(graph, result, r):
        raise ConstructionError(f"提供的 {graph.ident} 在 r={r} 下的边集不渗流")
    return result


def _place(product: Graph, graph: Graph, seeds: EdgeSet, suffix: VertexLabel) -> EdgeSet:
    """把 G 上的边集放到拷贝 G_suffix 上"""
    return EdgeSet.from_edges(product, [(u + suffix, w + suffix) for u, w in seeds.edges(graph)])


def _finish(plan: ConstructionPlan) -> ConstructionPlan:
    total = plan.total
    if len(total) != plan.expected:
        raise ConstructionError(f"构造大小 {len(total)} 与公式 {plan.expected} 不符")
    if not percolates(plan.graph, total, plan.r):
        raise ConstructionError(f"{plan.graph.ident} 上的构造在 r={plan.r} 下不渗流")
    logger.debug("构造完成: %s r=%d, %d 条边", plan.graph.ident, plan.r, len(total))
    return plan


def construct_tree_product(graph: Graph, tree: RootedTree, r: int, opt: OptimalSetSupplier) -> ConstructionPlan:
    """
    G □ T：G_0 放 r-最优集，其余拷贝放 (r-1)-最优集；
    deg_G(v) = r-1 时加 v_0v_1；deg_G(v) = r-1-t 时加 v_0v_1、
    度 > t 的树顶点向前 t 个孩子的边、度在 2..t 的树顶点向所有孩子的边。
    """
    if r < 1:
        raise ParameterError(f"需要 r ≥ 1，得到 {r}", "constructions")
    product = cartesian_product(graph, tree.tree)
    best, second = _supplied(opt, graph, r), _supplied(opt, graph, r - 1)
    base_sets = {0: _place(product, graph, best, tree.order[0])}
    for i in range(1, tree.n):
        base_sets[i] = _place(product, graph, second, tree.order[i])

    repair: List[Tuple[VertexLabel, VertexLabel]] = []
    for v in graph.vertices:
        d = graph.degree(v)
        if d > r - 1:
            continue
        repair.append((v + tree.order[0], v + tree.order[1]))
        t = r - 1 - d
        if t == 0:
            continue
        for i in range(1, tree.n):
            degree = tree.degree(i)
            if degree > t:
                chosen = tree.children[i][:t]
            elif degree >= 2:
                chosen = tree.children[i]
            else:
                continue
            repair.extend((v + tree.order[i], v + tree.order[j]) for j in chosen)

    expected = formula_tree_upper(
        {r: len(best), r - 1: len(second)}, DegreeHistogram.of(graph), tree.histogram(), r
    ).value
    return _finish(ConstructionPlan(product, r, base_sets, EdgeSet.from_edges(product, repair), expected))


def construct_star_product(graph: Graph, k: int, r: int, opt: OptimalSetSupplier) -> ConstructionPlan:
    """
    G □ S_k：中心拷贝放 r-最优集，叶拷贝放 (r-1)-最优集；
    deg_G(v) = r-t (1 ≤ t ≤ k-1) 时加 v_0v_1..v_0v_t，deg_G(v) ≤ r-k 时加全部 v_0v_i。
    """
    if k < 1 or r < 1:
        raise ParameterError(f"需要 k, r ≥ 1，得到 k={k}, r={r}", "constructions")
    product = cartesian_product(graph, make_family(FamilyKind.STAR, k))
    best, second = _supplied(opt, graph, r), _supplied(opt, graph, r - 1)
    base_sets = {0: _place(product, graph, best, (0,))}
    for i in range(1, k + 1):
        base_sets[i] = _place(product, graph, second, (i,))

    repair = []
    for v in graph.vertices:
        t = r - graph.degree(v)
        if t < 1:
            continue
        repair.extend((v + (0,), v + (i,)) for i in range(1, min(t, k) + 1))

    expected = formula_star_general({r: len(best), r - 1: len(second)}, DegreeHistogram.of(graph), k, r).value
    return _finish(ConstructionPlan(product, r, base_sets, EdgeSet.from_edges(product, repair), expected))


def construct_theta_product(graph: Graph, k: int, l: int, r: int, opt: OptimalSetSupplier) -> ConstructionPlan:
    """
    G □ H_{k,ℓ}：拷贝 1 放 r-最优集，拷贝 ℓ、k' 放 (r-2)-最优集，其余放 (r-1)-最优集；
    deg_G(v) = r-1 时加 v_1v_2；= r-2 时加除 v_1v_k' 与 v_2v_3 外的所有跨拷贝边；
    ≤ r-3 时加全部跨拷贝边。
    """
    if r < 2:
        raise ParameterError(f"需要 r ≥ 2，得到 {r}", "constructions")
    if l < 4:
        raise ParameterError(f"需要 k ≥ ℓ ≥ 4，得到 k={k}, ℓ={l}", "constructions")
    spec = ThetaSpec(k, l)
    product = cartesian_product(graph, make_family(FamilyKind.THETA, k, l))
    sets = {i: _supplied(opt, graph, r - i) for i in range(3)}
    base_sets = {}
    for tok in spec.vertices():
        if tok == "1":
            level = 0
        elif tok in (str(l), f"{k}'"):
            level = 2
        else:
            level = 1
        base_sets[tok] = _place(product, graph, sets[level], (tok,))

    skipped = {frozenset(("1", f"{k}'")), frozenset(("2", "3"))}
    repair = []
    for v in graph.vertices:
        d = graph.degree(v)
        if d == r - 1:
            repair.append((v + ("1",), v + ("2",)))
        elif d <= r - 2:
            for x, y, _ in spec.edges():
                if d == r - 2 and frozenset((x, y)) in skipped:
                    continue
                repair.append((v + (x,), v + (y,)))

    expected = formula_theta_general(
        {r - i: len(sets[i]) for i in range(3)}, DegreeHistogram.of(graph), k, l, r
    ).value
    return _finish(ConstructionPlan(product, r, base_sets, EdgeSet.from_edges(product, repair), expected))


def construct_product_chain(graph: Graph, r: int, opt: OptimalSetSupplier) -> ConstructionPlan:
    """
    对积图的最后一个因子做构造，前面因子的积 (部分积) 的最优集由 opt 提供

    Raises:
        ParameterError: 图不是路/树/星/θ 因子的积
    """
    factors = graph.factors
    if not factors:
        raise ParameterError(f"{graph.ident} 没有积结构", "constructions")
    built = [spec.build() for spec in factors]
    kinds = [chain_step_kind(f) for f in built]
    if None in kinds:
        raise ParameterError(f"{graph.ident} 含不支持构造的因子", "constructions")
    prev = product_of(built[:-1])
    last, kind = built[-1], kinds[-1]

    if kind == "single":
        product = cartesian_product(prev, last)
        seeds = _place(product, prev, _supplied(opt, prev, r), last.vertices[0])
        plan = ConstructionPlan(product, r, {last.vertices[0]: seeds}, EdgeSet(), len(seeds))
        plan = _finish(plan)
    elif kind == "tree":
        plan = construct_tree_product(prev, root_tree_at_leaf(last), r, opt)
    elif kind == "star":
        plan = construct_star_product(prev, factors[-1].params[0], r, opt)
    else:
        k, l = factors[-1].params
        plan = construct_theta_product(prev, k, l, r, opt)
    plan.notes.append(f"{kind} step on {prev.ident}")
    return plan
