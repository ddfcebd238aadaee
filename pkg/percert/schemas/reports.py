"""
命令输出的Pydantic模型
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


# ============ 证书 ============

class CertificateReport(BaseModel):
    """m_e(G, r) 的结果"""
    graph: str = Field(..., description="图标识")
    r: int = Field(..., description="阈值")
    value: Optional[int] = Field(None, description="m_e(G, r)，只有界时为空")
    status: str = Field(..., description="certified-exact / brute-forced / bounded")
    lower: int = Field(..., description="dim W 下界")
    upper: int = Field(..., description="见证集大小")
    lower_colouring: Optional[str] = Field(None, description="取得下界的着色")
    upper_source: Optional[str] = Field(None, description="见证集来源")
    witness: Optional[List[List[Any]]] = Field(None, description="见证渗流集的边")


class DimWReport(BaseModel):
    """dim W^r_{G,c}"""
    graph: str = Field(..., description="图标识")
    r: int = Field(..., description="阈值")
    colouring: str = Field(..., description="着色来源")
    dim: int = Field(..., description="维数")
    basis: Optional[List[Dict[str, List[str]]]] = Field(None, description="基向量 (顶点 → 系数由低到高)")
    colours: Optional[List[Dict[str, Any]]] = Field(None, description="着色记录")


# ============ 构造与公式 ============

class ConstructionReport(BaseModel):
    """积图上的构造"""
    graph: str = Field(..., description="积图标识")
    r: int = Field(..., description="阈值")
    size: int = Field(..., description="构造的边数")
    formula_size: int = Field(..., description="上界公式的值")
    percolates: bool = Field(..., description="构造是否渗流")
    edges: List[List[Any]] = Field(..., description="构造的边")
    notes: List[str] = Field(default_factory=list, description="说明")


class FormulaReport(BaseModel):
    """公式求值"""
    results: List[Dict[str, Any]] = Field(..., description="公式结果")


class FamilyCheckReport(BaseModel):
    """下界见证族的核对"""
    graph: str = Field(..., description="积图标识")
    family: str = Field(..., description="tree / star / theta")
    r: int = Field(..., description="阈值")
    claimed: int = Field(..., description="声称的维数 (下界公式)")
    members: int = Field(..., description="成员个数")
    rank: int = Field(..., description="系数矩阵的秩")
    ok: bool = Field(..., description="成员、零点、秩全部通过")
    provenance: Dict[str, int] = Field(default_factory=dict, description="各类成员个数")


# ============ 渗流 ============

class PercolationReport(BaseModel):
    """闭包过程"""
    graph: str = Field(..., description="图标识")
    r: int = Field(..., description="阈值")
    initial: int = Field(..., description="初始感染边数")
    rounds: List[List[List[Any]]] = Field(..., description="每轮新感染的边")
    final: int = Field(..., description="最终感染边数")
    percolates: bool = Field(..., description="是否感染全部边")


class ErrorReport(BaseModel):
    """错误输出"""
    error: Dict[str, Any] = Field(..., description="type / module / message")
