"""
图文件与着色文件的Pydantic模型
"""
from typing import Any, List, Tuple, Union

from pydantic import BaseModel, Field, RootModel

# 原子标签，或积图顶点的标签列表
Label = Union[int, str, List[Union[int, str]]]


class GraphFile(BaseModel):
    """图文件 {"vertices": [...], "edges": [[u, v], ...]}"""
    vertices: List[Label] = Field(..., description="顶点标签")
    edges: List[Tuple[Label, Label]] = Field(default_factory=list, description="边")


class ColouringRecord(BaseModel):
    """一条边的颜色"""
    edge: Tuple[Label, Label] = Field(..., description="边的两个端点")
    colour: Union[int, str] = Field(..., description="有理数颜色，形如 \"p/q\"")


class ColouringFile(RootModel[List[ColouringRecord]]):
    """着色文件"""


def label_json(label: Tuple[Any, ...]) -> Any:
    """单原子标签输出为原子，其余输出为列表"""
    return label[0] if len(label) == 1 else list(label)


def label_tuple(raw: Label) -> Tuple[Any, ...]:
    """label_json 的逆：原子包成一元组，列表转成元组"""
    return tuple(raw) if isinstance(raw, list) else (raw,)
