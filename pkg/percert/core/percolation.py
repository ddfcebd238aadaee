"""
渗流模块 - r-键自举渗流的闭包、渗流判定、极小性
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..exceptions import GraphError, ParameterError
from .graph import Edge, Graph


@dataclass(frozen=True)
class EdgeSet:
    """图的边子集，按边编号存成位掩码"""
    mask: int = 0

    @classmethod
    def from_edges(cls, graph: Graph, edges: Iterable[Edge]) -> "EdgeSet":
        mask = 0
        for u, v in edges:
            mask |= 1 << graph.edge_id(u, v)
        return cls(mask)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "EdgeSet":
        mask = 0
        for i in indices:
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def full(cls, graph: Graph) -> "EdgeSet":
        return cls((1 << graph.size) - 1)

    def indices(self) -> List[int]:
        result, mask, i = [], self.mask, 0
        while mask:
            if mask & 1:
                result.append(i)
            mask >>= 1
            i += 1
        return result

    def edges(self, graph: Graph) -> List[Edge]:
        return [graph.edges[i] for i in self.indices()]

    def union(self, other: "EdgeSet") -> "EdgeSet":
        return EdgeSet(self.mask | other.mask)

    def difference(self, other: "EdgeSet") -> "EdgeSet":
        return EdgeSet(self.mask & ~other.mask)

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def check(self, graph: Graph) -> "EdgeSet":
        if self.mask < 0 or self.mask >> graph.size:
            raise GraphError(f"边集含有 {graph.ident} 之外的边")
        return self


@dataclass(frozen=True)
class PercolationTrace:
    """闭包过程：每一轮新感染的边"""
    initial: EdgeSet
    rounds: Tuple[EdgeSet, ...]
    final: EdgeSet

    @property
    def round_count(self) -> int:
        return len(self.rounds)


def _check_threshold(r: int):
    if r < 0:
        raise ParameterError(f"阈值 r 必须非负，得到 {r}", "percolation")


def closure(graph: Graph, seeds: EdgeSet, r: int) -> PercolationTrace:
    """
    计算 ⟨S⟩_r：健康边 uv 若某端点已有至少 r 条感染边 (不含 uv 本身) 则被感染，
    同一轮的感染同时生效，直到不再变化。

    Args:
        graph: 图
        seeds: 初始感染边集
        r: 阈值

    Returns:
        PercolationTrace，轮数不超过 |E|
    """
    _check_threshold(r)
    seeds.check(graph)
    incidence = graph.incidence
    index = graph.index
    infected = seeds.mask
    rounds = []
    frontier = range(graph.order)
    while True:
        new = 0
        for v in frontier:
            inc = incidence[v]
            if inc & ~infected and bin(infected & inc).count("1") >= r:
                new |= inc & ~infected
        if not new:
            break
        rounds.append(EdgeSet(new))
        infected |= new
        touched = set()
        for i in EdgeSet(new).indices():
            u, w = graph.edges[i]
            touched.add(index[u])
            touched.add(index[w])
        frontier = sorted(touched)
    return PercolationTrace(seeds, tuple(rounds), EdgeSet(infected))


def closes(incidence: Sequence[int], full: int, mask: int, r: int) -> bool:
    """位掩码上的快速渗流判定，供穷举使用"""
    changed = True
    while changed:
        changed = False
        for inc in incidence:
            hit = mask & inc
            if hit != inc and bin(hit).count("1") >= r:
                mask |= inc
                changed = True
    return mask == full


def percolates(graph: Graph, seeds: EdgeSet, r: int) -> bool:
    """⟨S⟩_r = E(G)"""
    _check_threshold(r)
    seeds.check(graph)
    return closes(graph.incidence, (1 << graph.size) - 1, seeds.mask, r)


def is_minimal_percolating(graph: Graph, seeds: EdgeSet, r: int) -> bool:
    """
    S 是否极小：去掉任何一条边都不再渗流

    Raises:
        ParameterError: S 本身不渗流
    """
    if not percolates(graph, seeds, r):
        raise ParameterError("边集不渗流，无从判断极小性", "percolation")
    return not any(percolates(graph, EdgeSet(seeds.mask & ~(1 << i)), r) for i in seeds.indices())


def minimal_subset(graph: Graph, seeds: EdgeSet, r: int) -> EdgeSet:
    """按边编号依次尝试删边，得到包含于 S 的极小渗流集"""
    if not percolates(graph, seeds, r):
        raise ParameterError("初始边集不渗流", "percolation")
    incidence, full = graph.incidence, (1 << graph.size) - 1
    mask = seeds.mask
    for i in seeds.indices():
        trial = mask & ~(1 << i)
        if closes(incidence, full, trial, r):
            mask = trial
    return EdgeSet(mask)


def components_seed(graph: Graph) -> EdgeSet:
    """每个含边的连通分支取第一条边；它在 r=1 时渗流"""
    mask = 0
    for comp in graph.components_with_edges():
        first = comp[0]
        mask |= 1 << graph.edge_id(first, graph.neighbours(first)[0])
    return EdgeSet(mask)
