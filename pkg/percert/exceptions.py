"""
异常定义 - 所有库代码抛出 PercertError 的子类，CLI 统一转换为错误 JSON
"""
from typing import Any, Dict, Optional


class PercertError(Exception):
    """基础异常，带来源模块"""

    module = "percert"

    def __init__(self, message: str, module: Optional[str] = None):
        super().__init__(message)
        self.message = message
        if module is not None:
            self.module = module

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": type(self).__name__,
            "module": self.module,
            "message": self.message,
        }


class ParameterError(PercertError):
    """参数超出允许范围 (r < 0, k < ℓ 等)"""


class GraphError(PercertError):
    """图结构不满足前置条件：非树、根不是叶、非边、未知顶点"""

    module = "graph-core"


class ColouringError(PercertError):
    """着色不是正常着色，或 z 向量取值不是关联颜色"""

    module = "colouring"


class SpecParseError(PercertError):
    """图描述语言解析失败"""

    module = "cli"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (位置 {position})")
        self.position = position

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["position"] = self.position
        return data


class GraphFileError(PercertError):
    """图文件 / 着色文件格式错误"""

    module = "cli"


class CapExceededError(PercertError):
    """边数超过穷举上限"""

    module = "certifier"

    def __init__(self, edges: int, cap: int):
        super().__init__(f"边数 {edges} 超过穷举上限 {cap}")
        self.edges = edges
        self.cap = cap


class BoundedOnlyError(PercertError):
    """只得到上下界，无法给出最优边集"""

    module = "certifier"

    def __init__(self, graph_id: str, r: int, lower: int, upper: int):
        super().__init__(f"{graph_id} 在 r={r} 时只有界 [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["lower"] = self.lower
        data["upper"] = self.upper
        return data


class ConstructionError(PercertError):
    """构造出的边集不渗流或大小与公式不符"""

    module = "constructions"


class WitnessError(PercertError):
    """见证族成员不在 W 中、秩不足或 X 成员不满足零点条件"""

    module = "witness-space"

    def __init__(self, message: str, provenance: str = ""):
        super().__init__(f"{message} [{provenance}]" if provenance else message)
        self.provenance = provenance


class HypothesisError(PercertError):
    """精确公式的前提条件不成立"""

    module = "formulas"
