"""
边着色模块 - 正常边着色、贪心着色、积图上的扩展着色
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, FrozenSet, Hashable, List, Mapping, Optional, Sequence

import networkx as nx

from ..exceptions import ColouringError, GraphFileError, ParameterError
from ..schemas.graph import ColouringFile, label_json, label_tuple
from .graph import (
    FamilyKind,
    Graph,
    RootedTree,
    ThetaSpec,
    VertexLabel,
    cartesian_product,
    make_family,
    root_tree_at_leaf,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeColouring:
    """
    正常边着色 c: E(G) → Q。
    fresh 记录积图扩展时引入的新颜色 α (按树编号 / 叶编号 / θ 记号索引)。
    """
    graph: Graph
    colours: Mapping[FrozenSet[VertexLabel], Fraction]
    fresh: Mapping[Hashable, Fraction] = field(default_factory=dict)
    provenance: str = ""

    def __post_init__(self):
        missing = [e for e in self.graph.edges if frozenset(e) not in self.colours]
        if missing:
            raise ColouringError(f"边 {missing[0]} 没有颜色")
        extra = [key for key in self.colours if key not in self.graph.edge_index]
        if extra:
            raise ColouringError(f"{tuple(extra[0])} 不是边")
        for v in self.graph.vertices:
            seen = self.incident_colours(v)
            if len(set(seen)) != len(seen):
                raise ColouringError(f"顶点 {v} 处颜色重复，不是正常着色")

    def colour(self, u: VertexLabel, v: VertexLabel) -> Fraction:
        try:
            return self.colours[frozenset((tuple(u), tuple(v)))]
        except KeyError:
            raise ColouringError(f"{u}-{v} 不是边") from None

    def incident_colours(self, v: VertexLabel) -> List[Fraction]:
        """按邻点规范顺序列出 v 处的颜色"""
        return [self.colours[frozenset((v, u))] for u in self.graph.neighbours(v)]

    @property
    def palette(self) -> List[Fraction]:
        return sorted(set(self.colours.values()))

    def next_fresh_base(self) -> Fraction:
        """新颜色从 max(palette)+1 开始"""
        return max(self.colours.values(), default=Fraction(0))

    def to_records(self) -> List[Dict[str, Any]]:
        return [
            {"edge": [label_json(u), label_json(v)], "colour": str(self.colours[frozenset((u, v))])}
            for u, v in self.graph.edges
        ]


def is_proper(graph: Graph, colours: Mapping[FrozenSet[VertexLabel], Fraction]) -> bool:
    for v in graph.vertices:
        seen = [colours[frozenset((v, u))] for u in graph.neighbours(v)]
        if len(set(seen)) != len(seen):
            return False
    return True


def greedy_proper_colouring(graph: Graph, edge_order: Optional[Sequence[int]] = None) -> EdgeColouring:
    """
    贪心正常边着色：按边顺序给每条边最小的、两端都未用过的非负整数。
    颜色数不超过 2Δ-1。

    Args:
        graph: 图
        edge_order: 边编号的排列，缺省为规范顺序
    """
    order = list(range(graph.size)) if edge_order is None else list(edge_order)
    if sorted(order) != list(range(graph.size)):
        raise ParameterError("edge_order 必须是边编号的排列", "colouring")

    used: Dict[VertexLabel, set] = {v: set() for v in graph.vertices}
    colours: Dict[FrozenSet[VertexLabel], Fraction] = {}
    for i in order:
        u, v = graph.edges[i]
        c = 0
        while c in used[u] or c in used[v]:
            c += 1
        used[u].add(c)
        used[v].add(c)
        colours[frozenset((u, v))] = Fraction(c)
    return EdgeColouring(graph, colours, provenance="greedy" if edge_order is None else "greedy-permuted")


def permuted_greedy_colourings(graph: Graph, count: int, seed: int = 0) -> List[EdgeColouring]:
    """count 个随机边顺序下的贪心着色 (同一 seed 结果固定)，来源标成 greedy-permuted[seed:序号]"""
    rng = random.Random(seed)
    result = []
    for n in range(count):
        order = list(range(graph.size))
        rng.shuffle(order)
        colouring = greedy_proper_colouring(graph, order)
        result.append(EdgeColouring(graph, colouring.colours, provenance=f"greedy-permuted[{seed}:{n}]"))
    return result


# ============ 积图着色 ============

def _copies(base: EdgeColouring, factor: Graph) -> Dict[FrozenSet[VertexLabel], Fraction]:
    """G 的每个拷贝 G_i 上沿用 c"""
    colours = {}
    for t in factor.vertices:
        for u, v in base.graph.edges:
            colours[frozenset((u + t, v + t))] = base.colours[frozenset((u, v))]
    return colours


def product_colouring_tree(base: EdgeColouring, tree: RootedTree) -> EdgeColouring:
    """
    G □ T 上的着色 c'：拷贝 G_i 沿用 c，边 v_i v_{parent(i)} 着 α_i = max(c)+i

    Args:
        base: G 上的正常着色
        tree: 以叶为根的树
    """
    graph = base.graph
    product = cartesian_product(graph, tree.tree)
    colours = _copies(base, tree.tree)
    top = base.next_fresh_base()
    fresh = {i: top + i for i in range(1, tree.n)}
    for i in range(1, tree.n):
        ti, tp = tree.order[i], tree.order[tree.parent[i]]
        for v in graph.vertices:
            colours[frozenset((v + ti, v + tp))] = fresh[i]
    return EdgeColouring(product, colours, fresh, provenance=f"{base.provenance}+tree")


def product_colouring_star(base: EdgeColouring, k: int) -> EdgeColouring:
    """G □ S_k 上的着色：边 v_0 v_i 着 α_i"""
    if k < 0:
        raise ParameterError(f"star 需要 k ≥ 0，得到 {k}", "colouring")
    graph = base.graph
    star = make_family(FamilyKind.STAR, k)
    product = cartesian_product(graph, star)
    colours = _copies(base, star)
    top = base.next_fresh_base()
    fresh = {i: top + i for i in range(1, k + 1)}
    for i in range(1, k + 1):
        for v in graph.vertices:
            colours[frozenset((v + (0,), v + (i,)))] = fresh[i]
    return EdgeColouring(product, colours, fresh, provenance=f"{base.provenance}+star")


def product_colouring_theta(base: EdgeColouring, k: int, l: int) -> EdgeColouring:
    """
    G □ H_{k,ℓ} 上的着色：边 (i, i+1) 着 α_i，边 (i', (i+1)') 着 α_{i'}，
    α_{1'} = α_1，共 k+ℓ-1 个新颜色。
    """
    if l < 4:
        raise ParameterError(f"theta 积着色需要 k ≥ ℓ ≥ 4，得到 k={k}, ℓ={l}", "colouring")
    spec = ThetaSpec(k, l)
    graph = base.graph
    theta = make_family(FamilyKind.THETA, k, l)
    product = cartesian_product(graph, theta)
    colours = _copies(base, theta)
    top = base.next_fresh_base()
    fresh = {token: top + i for i, token in enumerate(spec.alpha_tokens(), start=1)}
    for a, b, token in spec.edges():
        for v in graph.vertices:
            colours[frozenset((v + (a,), v + (b,)))] = fresh[token]
    return EdgeColouring(product, colours, fresh, provenance=f"{base.provenance}+theta")


def _lift_single(base: EdgeColouring, factor: Graph) -> EdgeColouring:
    product = cartesian_product(base.graph, factor)
    return EdgeColouring(product, _copies(base, factor), provenance=base.provenance)


def chain_step_kind(factor: Graph) -> Optional[str]:
    """
    判断单个因子能否参与递归着色/构造："single"、"tree"、"star"、"theta"，否则 None
    """
    if factor.factors is None or len(factor.factors) != 1:
        return None
    spec = factor.factors[0]
    if factor.order == 1:
        return "single"
    if spec.kind == FamilyKind.STAR:
        return "star"
    if spec.kind == FamilyKind.THETA:
        return "theta" if spec.params[1] >= 4 else None
    if nx.is_tree(factor.nx):
        return "tree"
    return None


def product_colouring_chain(factors: Sequence[Graph]) -> EdgeColouring:
    """
    从单点图出发依次对路/树、星、θ 因子扩展着色，得到积图上的着色 c'

    Raises:
        ParameterError: 某个因子不在支持的族中
    """
    colouring = EdgeColouring(Graph.unit(), {}, provenance="chain")
    for factor in factors:
        kind = chain_step_kind(factor)
        if kind == "single":
            colouring = _lift_single(colouring, factor)
        elif kind == "star":
            colouring = product_colouring_star(colouring, factor.factors[0].params[0])
        elif kind == "theta":
            colouring = product_colouring_theta(colouring, *factor.factors[0].params)
        elif kind == "tree":
            colouring = product_colouring_tree(colouring, root_tree_at_leaf(factor))
        else:
            raise ParameterError(f"因子 {factor.ident} 不支持递归着色", "colouring")
    logger.debug("递归着色完成: %s, %d 种颜色", colouring.graph.ident, len(colouring.palette))
    return EdgeColouring(colouring.graph, colouring.colours, colouring.fresh, provenance="product")


def rebind(colouring: EdgeColouring, graph: Graph) -> EdgeColouring:
    """把着色挂到标签与边集相同的另一个 Graph 对象上"""
    if set(colouring.graph.edge_index) != set(graph.edge_index):
        raise ColouringError(f"着色的图与 {graph.ident} 不一致")
    return EdgeColouring(graph, colouring.colours, colouring.fresh, colouring.provenance)


def load_colouring_file(path: Path, graph: Graph) -> EdgeColouring:
    """读取 JSON 着色文件 [{"edge": [u, v], "colour": "p/q"}, ...]"""
    try:
        data = ColouringFile.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise GraphFileError(f"找不到着色文件 {path}") from None
    except ValueError as e:
        raise GraphFileError(f"着色文件 {path} 格式错误: {e}") from None

    colours = {}
    for record in data.root:
        u, v = label_tuple(record.edge[0]), label_tuple(record.edge[1])
        graph.edge_id(u, v)
        try:
            colours[frozenset((u, v))] = Fraction(str(record.colour))
        except (ValueError, ZeroDivisionError):
            raise GraphFileError(f"颜色 {record.colour!r} 不是有理数") from None
    return EdgeColouring(graph, colours, provenance=f"file:{Path(path).name}")
