"""
证书模块 - 用多项式下界与构造/穷举上界给出 m_e(G, r) 的证书
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..config import Settings, get_cache_path, get_settings
from ..db.models import CertificateStore
from ..exceptions import BoundedOnlyError, CapExceededError, ConstructionError, ParameterError
from .colouring import (
    EdgeColouring,
    chain_step_kind,
    greedy_proper_colouring,
    permuted_greedy_colourings,
    product_colouring_chain,
    rebind,
)
from .constructions import construct_product_chain
from .formulas import Hypothesis
from .graph import Graph
from .percolation import EdgeSet, closes, components_seed, minimal_subset, percolates
from .witness import dim_w

logger = logging.getLogger(__name__)


class CertStatus(Enum):
    """证书状态"""
    EXACT = "certified-exact"  # 下界 = 见证集大小
    BRUTE = "brute-forced"  # 穷举确定最小值
    BOUNDED = "bounded"  # 只有上下界


class Strategy(Enum):
    AUTO = "auto"
    CONSTRUCTION = "construction"
    BRUTE_FORCE = "brute-force"


@dataclass
class CertifiedValue:
    """m_e(G, r) 的证书"""
    graph_id: str
    r: int
    lower: int
    lower_provenance: str
    upper: int
    upper_provenance: str
    witness: EdgeSet
    status: CertStatus

    @property
    def value(self) -> Optional[int]:
        return None if self.status == CertStatus.BOUNDED else self.upper

    def to_record(self) -> Dict[str, Any]:
        return {
            "graph_id": self.graph_id,
            "r": self.r,
            "lower": self.lower,
            "lower_provenance": self.lower_provenance,
            "upper": self.upper,
            "upper_provenance": self.upper_provenance,
            "witness": format(self.witness.mask, "x"),
            "status": self.status.value,
        }

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "CertifiedValue":
        return cls(
            graph_id=record["graph_id"],
            r=record["r"],
            lower=record["lower"],
            lower_provenance=record["lower_provenance"],
            upper=record["upper"],
            upper_provenance=record["upper_provenance"],
            witness=EdgeSet(int(record["witness"], 16)),
            status=CertStatus(record["status"]),
        )


def is_chainable(graph: Graph) -> bool:
    """图是否为路/树、星、θ 因子 (可含单点因子) 的积"""
    if not graph.factors:
        return False
    return all(chain_step_kind(spec.build()) is not None for spec in graph.factors)


class Certifier:
    """证书计算器，持有配置与缓存"""

    def __init__(self, settings: Optional[Settings] = None, store: Optional[CertificateStore] = None):
        self.settings = settings or get_settings()
        self.store = store if store is not None else CertificateStore(get_cache_path())

    # ============ 下界 ============

    def candidate_colourings(self, graph: Graph) -> List[EdgeColouring]:
        """递归积着色 (若可用)、贪心着色、若干随机贪心着色"""
        candidates = []
        if is_chainable(graph):
            built = [spec.build() for spec in graph.factors]
            candidates.append(rebind(product_colouring_chain(built), graph))
        candidates.append(greedy_proper_colouring(graph))
        candidates.extend(
            permuted_greedy_colourings(graph, self.settings.extra_colourings, self.settings.colouring_seed)
        )
        return candidates

    def lower_bound(self, graph: Graph, r: int) -> Tuple[int, str]:
        best, provenance = -1, ""
        for colouring in self.candidate_colourings(graph):
            dim = dim_w(colouring, r)
            if dim > best:
                best, provenance = dim, colouring.provenance
        return best, provenance

    # ============ 穷举 ============

    def brute_force(self, graph: Graph, r: int, floor: int = 0, cap: Optional[int] = None) -> Tuple[int, EdgeSet]:
        """
        从 floor 开始按大小、大小内按字典序枚举边子集，返回第一个渗流集

        Args:
            graph: 图
            r: 阈值
            floor: 已知下界，更小的集合不再枚举
            cap: 边数上限，缺省取配置

        Returns:
            (最小值, 字典序最小的最优集)
        """
        if r < 0:
            raise ParameterError(f"阈值 r 必须非负，得到 {r}", "certifier")
        cap = self.settings.bruteforce_cap if cap is None else cap
        m = graph.size
        if m > cap:
            raise CapExceededError(m, cap)
        incidence, full = graph.incidence, (1 << m) - 1
        for size in range(min(max(floor, 0), m), m + 1):
            logger.debug("枚举 %s r=%d 大小 %d", graph.ident, r, size)
            for combo in combinations(range(m), size):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                if closes(incidence, full, mask, r):
                    return size, EdgeSet(mask)
        return m, EdgeSet(full)

    # ============ 证书 ============

    def certify(
        self,
        graph: Graph,
        r: int,
        strategy: Strategy = Strategy.AUTO,
        cap: Optional[int] = None,
    ) -> CertifiedValue:
        """
        计算 m_e(G, r) 的证书：下界取候选着色上 dim W 的最大值，
        上界取全部边、r=1 时每个分支一条边、积构造中最小者；
        上下界不等时在上限内穷举，否则贪心删边。
        """
        strategy = Strategy(strategy)
        if r < 0:
            raise ParameterError(f"阈值 r 必须非负，得到 {r}", "certifier")
        key = (graph.ident, r)
        if strategy == Strategy.AUTO and cap is None:
            cached = self.store.get(key)
            if cached is not None:
                return CertifiedValue.from_record(cached)

        if r == 0 or graph.size == 0:
            cert = CertifiedValue(graph.ident, r, 0, "trivial", 0, "empty", EdgeSet(), CertStatus.EXACT)
        else:
            cert = self._certify(graph, r, strategy, cap)
        logger.info("%s r=%d: [%d, %d] %s", graph.ident, r, cert.lower, cert.upper, cert.status.value)

        if strategy == Strategy.AUTO and cap is None:
            return CertifiedValue.from_record(self.store.put(key, cert.to_record()))
        return cert

    def _certify(self, graph: Graph, r: int, strategy: Strategy, cap: Optional[int]) -> CertifiedValue:
        lower, lower_provenance = self.lower_bound(graph, r)
        witness, provenance = EdgeSet.full(graph), "all-edges"
        if r == 1:
            witness, provenance = components_seed(graph), "components"
        elif strategy != Strategy.BRUTE_FORCE and is_chainable(graph):
            try:
                plan = construct_product_chain(graph, r, self.optimal_set)
                built = EdgeSet.from_edges(graph, plan.total.edges(plan.graph))
                if len(built) < len(witness):
                    witness, provenance = built, "construction"
            except (ConstructionError, BoundedOnlyError, ParameterError) as e:
                logger.info("%s r=%d 构造失败: %s", graph.ident, r, e.message)

        if len(witness) == lower and strategy != Strategy.BRUTE_FORCE:
            status = CertStatus.EXACT
        elif strategy != Strategy.CONSTRUCTION and graph.size <= (self.settings.bruteforce_cap if cap is None else cap):
            size, witness = self.brute_force(graph, r, floor=lower, cap=cap)
            provenance = "brute-force"
            status = CertStatus.EXACT if size == lower else CertStatus.BRUTE
        elif strategy == Strategy.BRUTE_FORCE:
            raise CapExceededError(graph.size, self.settings.bruteforce_cap if cap is None else cap)
        else:
            witness = minimal_subset(graph, witness, r)
            provenance += "+descent"
            status = CertStatus.EXACT if len(witness) == lower else CertStatus.BOUNDED

        if not percolates(graph, witness, r):
            raise ConstructionError(f"{graph.ident} 的见证集在 r={r} 下不渗流", "certifier")
        return CertifiedValue(graph.ident, r, lower, lower_provenance, len(witness), provenance, witness, status)

    def optimal_set(self, graph: Graph, r: int) -> EdgeSet:
        """给构造模块用的最优集提供者"""
        if r <= 0 or graph.size == 0:
            return EdgeSet()
        cert = self.certify(graph, r)
        if cert.status == CertStatus.BOUNDED:
            raise BoundedOnlyError(graph.ident, r, cert.lower, cert.upper)
        return cert.witness

    def hypothesis(self, graph: Graph, levels: Sequence[int]) -> Optional[Hypothesis]:
        """
        给出 m_e = dim W 的假设凭据：要求同一个着色 c 在每个阈值上都取到 m_e。
        任一阈值未证实或没有公共着色时返回 None。
        """
        values: Dict[int, int] = {}
        for i in levels:
            if i <= 0:
                continue
            cert = self.certify(graph, i)
            if cert.status != CertStatus.EXACT:
                return None
            values[i] = cert.value
        for colouring in self.candidate_colourings(graph):
            if all(dim_w(colouring, i) == v for i, v in values.items()):
                return Hypothesis(tuple(values), colouring.provenance)
        logger.info("%s 在阈值 %s 上没有公共着色取到 m_e", graph.ident, sorted(values))
        return None


# ============ 模块级入口 ============

def brute_force_me(graph: Graph, r: int, floor: int = 0) -> int:
    from ..deps import get_certifier

    return get_certifier().brute_force(graph, r, floor)[0]


def certify_me(graph: Graph, r: int, strategy: Strategy = Strategy.AUTO) -> CertifiedValue:
    from ..deps import get_certifier

    return get_certifier().certify(graph, r, strategy)


def optimal_set_supplier(graph: Graph, r: int) -> EdgeSet:
    from ..deps import get_certifier

    return get_certifier().optimal_set(graph, r)
