"""
图核心模块 - 有限简单无向图、图族、笛卡尔积、度分布、有根树
"""
import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..exceptions import GraphError, GraphFileError, ParameterError
from ..schemas.graph import GraphFile, label_json, label_tuple

# 顶点标签是原子标签组成的元组；积图的标签是各因子标签的拼接
VertexLabel = Tuple[Any, ...]
Edge = Tuple[VertexLabel, VertexLabel]


class FamilyKind(Enum):
    """图族类型"""
    PATH = "path"
    STAR = "star"
    CYCLE = "cycle"
    COMPLETE = "complete"
    THETA = "theta"
    FILE = "file"


@dataclass(frozen=True)
class FamilySpec:
    """图族描述 (构造元数据)"""
    kind: FamilyKind
    params: Tuple[int, ...] = ()
    text: str = ""
    graph: Optional["Graph"] = field(default=None, compare=False, repr=False)

    def build(self) -> "Graph":
        if self.kind == FamilyKind.FILE:
            return self.graph
        return make_family(self.kind, *self.params)


# ============ θ 图 ============

@dataclass(frozen=True)
class ThetaSpec:
    """
    θ 图 H_{k,ℓ}：长为 ℓ 的圈 1..ℓ 与长为 k 的圈 1',2',...,k' 共享边 1-2
    (1' = 1, 2' = 2)。顶点记号 "i" 与 "i'"，顺序 1 < 2 < 3 < 3' < 4 < 4' ...
    """
    k: int
    l: int

    def __post_init__(self):
        if self.l < 3:
            raise ParameterError(f"theta 需要 ℓ ≥ 3，得到 ℓ={self.l}", "graph-core")
        if self.k < self.l:
            raise ParameterError(f"theta 需要 k ≥ ℓ，得到 k={self.k}, ℓ={self.l}", "graph-core")

    def vertices(self) -> List[str]:
        tokens = []
        for i in range(1, self.k + 1):
            if i <= self.l:
                tokens.append(str(i))
            if i >= 3:
                tokens.append(f"{i}'")
        return tokens

    def alpha_tokens(self) -> List[str]:
        """新颜色的下标：[ℓ] ∪ {2',...,k'}，1' 与 1 共用"""
        tokens = []
        for i in range(1, self.k + 1):
            if i <= self.l:
                tokens.append(str(i))
            if i >= 2:
                tokens.append(f"{i}'")
        return tokens

    def vertex(self, token: str) -> str:
        """把 1'、2' 归一到 1、2"""
        return {"1'": "1", "2'": "2"}.get(token, token)

    def next_token(self, token: str) -> str:
        """沿所在圈的下一个顶点记号"""
        if token.endswith("'"):
            i = int(token[:-1])
            return "1'" if i == self.k else f"{i + 1}'"
        i = int(token)
        return "1" if i == self.l else str(i + 1)

    def prev_token(self, token: str) -> str:
        if token.endswith("'"):
            i = int(token[:-1])
            return f"{self.k}'" if i == 1 else f"{i - 1}'"
        i = int(token)
        return str(self.l) if i == 1 else str(i - 1)

    def edges(self) -> List[Tuple[str, str, str]]:
        """(a, b, 颜色记号)：边 (i, i+1) 记号 i，边 (i', (i+1)') 记号 i'"""
        result = []
        for i in range(1, self.l + 1):
            result.append((str(i), self.next_token(str(i)), str(i)))
        for i in range(2, self.k + 1):
            token = f"{i}'"
            result.append((self.vertex(token), self.vertex(self.next_token(token)), token))
        return result

    def edge_token(self, token: str) -> Tuple[str, str]:
        """颜色记号对应的边"""
        return self.vertex(token), self.vertex(self.next_token(token))


# ============ 图 ============

class Graph:
    """
    有限简单无向图，内部用冻结的 networkx 图存储。
    顶点有固定的规范顺序；边按 (index(u), index(v)) 字典序编号。
    """

    def __init__(
        self,
        graph: nx.Graph,
        vertices: Sequence[VertexLabel],
        factors: Optional[Tuple[FamilySpec, ...]] = None,
    ):
        vertices = tuple(tuple(v) for v in vertices)
        if set(vertices) != set(graph.nodes):
            raise GraphError("顶点顺序与图的顶点集不一致")
        if any(u == v for u, v in graph.edges):
            raise GraphError("不允许自环")
        self._nx = nx.freeze(graph)
        self.vertices = vertices
        self.index: Dict[VertexLabel, int] = {v: i for i, v in enumerate(vertices)}
        self.factors = factors

        edges = []
        for u in vertices:
            for w in sorted(graph.neighbors(u), key=self.index.__getitem__):
                if self.index[w] > self.index[u]:
                    edges.append((u, w))
        self.edges: Tuple[Edge, ...] = tuple(edges)
        self.edge_index: Dict[FrozenSet[VertexLabel], int] = {
            frozenset(e): i for i, e in enumerate(self.edges)
        }

    @classmethod
    def unit(cls) -> "Graph":
        """空标签的单点图，笛卡尔积的单位元"""
        g = nx.Graph()
        g.add_node(())
        return cls(g, [()], factors=())

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[VertexLabel],
        edges: Iterable[Edge],
        factors: Optional[Tuple[FamilySpec, ...]] = None,
    ) -> "Graph":
        vertices = [tuple(v) for v in vertices]
        g = nx.Graph()
        g.add_nodes_from(vertices)
        for u, v in edges:
            u, v = tuple(u), tuple(v)
            if u not in g or v not in g:
                raise GraphError(f"边 {u}-{v} 的端点不是顶点")
            if u == v:
                raise GraphError(f"自环 {u}")
            if g.has_edge(u, v):
                raise GraphError(f"重边 {u}-{v}")
            g.add_edge(u, v)
        return cls(g, vertices, factors)

    # ---- 基本属性 ----

    @property
    def nx(self) -> nx.Graph:
        return self._nx

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def arity(self) -> int:
        """顶点标签的长度 (积图中因子的个数)"""
        return len(self.vertices[0]) if self.vertices else 0

    @cached_property
    def ident(self) -> str:
        """规范标识：族图/积图用描述文本，其余用结构哈希"""
        if self.factors is not None:
            texts = [f.text for f in self.factors]
            if not texts:
                return "unit"
            if len(texts) == 1:
                return texts[0]
            return "prod(" + ",".join(texts) + ")"
        payload = json.dumps(
            {"vertices": [list(v) for v in self.vertices], "edges": [[list(u), list(v)] for u, v in self.edges]},
            default=str,
        )
        return "graph:" + hashlib.sha1(payload.encode("utf-8")).hexdigest()[:16]

    @property
    def theta(self) -> Optional[ThetaSpec]:
        if self.factors is not None and len(self.factors) == 1 and self.factors[0].kind == FamilyKind.THETA:
            k, l = self.factors[0].params
            return ThetaSpec(k, l)
        return None

    def neighbours(self, v: VertexLabel) -> List[VertexLabel]:
        if v not in self.index:
            raise GraphError(f"未知顶点 {v}")
        return sorted(self._nx.neighbors(v), key=self.index.__getitem__)

    def degree(self, v: VertexLabel) -> int:
        return self._nx.degree(v)

    def has_edge(self, u: VertexLabel, v: VertexLabel) -> bool:
        return frozenset((u, v)) in self.edge_index

    def edge_id(self, u: VertexLabel, v: VertexLabel) -> int:
        try:
            return self.edge_index[frozenset((tuple(u), tuple(v)))]
        except KeyError:
            raise GraphError(f"{u}-{v} 不是边") from None

    @cached_property
    def incidence(self) -> Tuple[int, ...]:
        """每个顶点的关联边位掩码"""
        masks = [0] * self.order
        for i, (u, v) in enumerate(self.edges):
            masks[self.index[u]] |= 1 << i
            masks[self.index[v]] |= 1 << i
        return tuple(masks)

    @property
    def min_degree(self) -> int:
        return min((d for _, d in self._nx.degree), default=0)

    @property
    def max_degree(self) -> int:
        return max((d for _, d in self._nx.degree), default=0)

    def is_connected(self) -> bool:
        return self.order > 0 and nx.is_connected(self._nx)

    def components_with_edges(self) -> List[List[VertexLabel]]:
        """含边的连通分支 (顶点按规范顺序)"""
        comps = []
        for comp in nx.connected_components(self._nx):
            if len(comp) > 1:
                comps.append(sorted(comp, key=self.index.__getitem__))
        comps.sort(key=lambda c: self.index[c[0]])
        return comps

    def __repr__(self) -> str:
        return f"Graph({self.ident}, |V|={self.order}, |E|={self.size})"


# ============ 图族 ============

def make_family(kind: FamilyKind, *params: int) -> Graph:
    """
    构造标准图族，原子标签为整数 (θ 图为 "i"/"i'" 字符串)

    Args:
        kind: 图族
        params: path(n≥1), star(k≥0), cycle(n≥3), complete(n≥1), theta(k≥ℓ≥3)

    Returns:
        带构造元数据的 Graph
    """
    kind = FamilyKind(kind)
    expected = 2 if kind == FamilyKind.THETA else 1
    if len(params) != expected:
        raise ParameterError(f"{kind.value} 需要 {expected} 个参数", "graph-core")
    params = tuple(int(p) for p in params)
    text = f"{kind.value}({','.join(str(p) for p in params)})"

    if kind == FamilyKind.PATH:
        (n,) = params
        if n < 1:
            raise ParameterError(f"path 需要 n ≥ 1，得到 {n}", "graph-core")
        g = nx.path_graph(n)
    elif kind == FamilyKind.STAR:
        (k,) = params
        if k < 0:
            raise ParameterError(f"star 需要 k ≥ 0，得到 {k}", "graph-core")
        g = nx.star_graph(k) if k > 0 else nx.empty_graph(1)
    elif kind == FamilyKind.CYCLE:
        (n,) = params
        if n < 3:
            raise ParameterError(f"cycle 需要 n ≥ 3，得到 {n}", "graph-core")
        g = nx.cycle_graph(n)
    elif kind == FamilyKind.COMPLETE:
        (n,) = params
        if n < 1:
            raise ParameterError(f"complete 需要 n ≥ 1，得到 {n}", "graph-core")
        g = nx.complete_graph(n)
    elif kind == FamilyKind.THETA:
        spec = ThetaSpec(*params)
        g = nx.Graph()
        g.add_nodes_from(spec.vertices())
        g.add_edges_from((a, b) for a, b, _ in spec.edges())
        order = spec.vertices()
        g = nx.relabel_nodes(g, {t: (t,) for t in order})
        return Graph(g, [(t,) for t in order], factors=(FamilySpec(kind, params, text),))
    else:
        raise ParameterError(f"不能直接构造 {kind.value}", "graph-core")

    g = nx.relabel_nodes(g, {i: (i,) for i in g.nodes})
    return Graph(g, [(i,) for i in range(g.number_of_nodes())], factors=(FamilySpec(kind, params, text),))


def cartesian_product(first: Graph, second: Graph) -> Graph:
    """
    笛卡尔积 G □ H：(u,v)~(u',v') 当且仅当 u=u' 且 vv'∈E(H)，或 v=v' 且 uu'∈E(G)。
    标签拼接为 u + v；顶点顺序为 (G 顺序) × (H 顺序)。
    """
    raw = nx.cartesian_product(first.nx, second.nx)
    raw = nx.relabel_nodes(raw, {(u, v): u + v for u, v in raw.nodes})
    vertices = [u + v for u in first.vertices for v in second.vertices]
    factors = None
    if first.factors is not None and second.factors is not None:
        factors = first.factors + second.factors
    return Graph(nx.Graph(raw), vertices, factors)


def product_of(factors: Sequence[Graph]) -> Graph:
    """从单位图开始依次做积"""
    result = Graph.unit()
    for factor in factors:
        result = cartesian_product(result, factor)
    return result


# ============ 度分布 ============

@dataclass(frozen=True)
class DegreeHistogram:
    """度分布：counts[t] = 度为 t 的顶点数"""
    counts: Tuple[int, ...]

    @classmethod
    def of(cls, graph: Graph) -> "DegreeHistogram":
        return cls(tuple(nx.degree_histogram(graph.nx)))

    @classmethod
    def from_mapping(cls, mapping: Dict[int, int]) -> "DegreeHistogram":
        top = max(mapping, default=-1)
        return cls(tuple(mapping.get(t, 0) for t in range(top + 1)))

    def __getitem__(self, t: int) -> int:
        if t < 0 or t >= len(self.counts):
            return 0
        return self.counts[t]

    @property
    def vertices(self) -> int:
        return sum(self.counts)

    @property
    def edges(self) -> int:
        return sum(t * c for t, c in enumerate(self.counts)) // 2

    @property
    def min_degree(self) -> int:
        return next((t for t, c in enumerate(self.counts) if c), 0)

    @property
    def max_degree(self) -> int:
        return max((t for t, c in enumerate(self.counts) if c), default=0)

    def convolve(self, other: "DegreeHistogram") -> "DegreeHistogram":
        """积图的度分布：度相加、数目相乘"""
        if not self.counts or not other.counts:
            return DegreeHistogram(())
        merged = np.convolve(np.asarray(self.counts, dtype=np.int64), np.asarray(other.counts, dtype=np.int64))
        return DegreeHistogram(tuple(int(x) for x in merged))

    def to_dict(self) -> Dict[int, int]:
        return {t: c for t, c in enumerate(self.counts) if c}


def degree_histogram(graph: Graph) -> DegreeHistogram:
    return DegreeHistogram.of(graph)


# ============ 有根树 ============

@dataclass(frozen=True)
class RootedTree:
    """
    以叶为根的树，顶点按 BFS 重新编号 0..n-1，层数单调不减，根为 0。
    order[i] 是编号 i 对应的原始标签。
    """
    tree: Graph
    order: Tuple[VertexLabel, ...]
    parent: Tuple[Optional[int], ...]
    children: Tuple[Tuple[int, ...], ...]
    levels: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.order)

    def degree(self, i: int) -> int:
        return len(self.children[i]) + (0 if self.parent[i] is None else 1)

    def subtree(self, i: int) -> List[int]:
        """以 i 为根的子树 T_i (删去 i 与父亲的边后含 i 的分支)"""
        result, stack = [], [i]
        while stack:
            j = stack.pop()
            result.append(j)
            stack.extend(reversed(self.children[j]))
        return sorted(result)

    def histogram(self) -> DegreeHistogram:
        return DegreeHistogram.of(self.tree)

    def is_path(self) -> bool:
        return self.tree.max_degree <= 2


def _label_key(label: VertexLabel) -> Tuple[Tuple[bool, Any], ...]:
    """标签的字典序；数字排在字符串之前，混合类型也可比较"""
    return tuple((isinstance(a, str), a) for a in label)


def root_tree_at_leaf(tree: Graph, leaf: Optional[VertexLabel] = None) -> RootedTree:
    """
    把树在一个叶上定根并按层重新编号

    Args:
        tree: 至少两个顶点的树
        leaf: 根，缺省取字典序最小的叶

    Returns:
        RootedTree
    """
    if tree.order < 2 or not nx.is_tree(tree.nx):
        raise GraphError(f"{tree.ident} 不是至少两个顶点的树")
    if leaf is None:
        leaf = min((v for v in tree.vertices if tree.degree(v) == 1), key=_label_key)
    leaf = tuple(leaf)
    if leaf not in tree.index:
        raise GraphError(f"未知顶点 {leaf}")
    if tree.degree(leaf) != 1:
        raise GraphError(f"{leaf} 不是叶")

    bfs = list(nx.bfs_edges(tree.nx, leaf, sort_neighbors=lambda vs: sorted(vs, key=tree.index.__getitem__)))
    order = [leaf] + [child for _, child in bfs]
    new_index = {v: i for i, v in enumerate(order)}
    parent: List[Optional[int]] = [None] * len(order)
    children: List[List[int]] = [[] for _ in order]
    levels = [0] * len(order)
    for p, c in bfs:
        parent[new_index[c]] = new_index[p]
        children[new_index[p]].append(new_index[c])
        levels[new_index[c]] = levels[new_index[p]] + 1
    return RootedTree(
        tree=tree,
        order=tuple(order),
        parent=tuple(parent),
        children=tuple(tuple(sorted(ch)) for ch in children),
        levels=tuple(levels),
    )


# ============ 图文件 ============

def load_graph_file(path: Path) -> Graph:
    """读取 JSON 图文件 {"vertices": [...], "edges": [[u, v], ...]}"""
    try:
        text = Path(path).read_text(encoding="utf-8")
        data = GraphFile.model_validate_json(text)
    except FileNotFoundError:
        raise GraphFileError(f"找不到图文件 {path}") from None
    except ValueError as e:
        raise GraphFileError(f"图文件 {path} 格式错误: {e}") from None

    vertices = [label_tuple(v) for v in data.vertices]
    if len(set(vertices)) != len(vertices):
        raise GraphFileError(f"图文件 {path} 有重复顶点")
    if len({len(v) for v in vertices}) > 1:
        raise GraphFileError(f"图文件 {path} 的顶点标签长度不一致")
    try:
        graph = Graph.from_edges(vertices, [(label_tuple(u), label_tuple(v)) for u, v in data.edges])
    except GraphError as e:
        raise GraphFileError(f"图文件 {path}: {e.message}") from None
    spec = FamilySpec(FamilyKind.FILE, (), f"file:{graph.ident[6:]}", graph)
    return Graph(nx.Graph(graph.nx), graph.vertices, factors=(spec,))


def dump_graph(graph: Graph) -> Dict[str, Any]:
    return {
        "vertices": [label_json(v) for v in graph.vertices],
        "edges": [[label_json(u), label_json(v)] for u, v in graph.edges],
    }
