"""
批量核对 - 对一族实例比较下界、公式、构造与穷举结果
"""
import logging
from typing import Dict, List, Optional, Tuple

import pandas as pd

from ..exceptions import ParameterError, PercertError
from .certifier import Certifier, is_chainable
from .constructions import construct_product_chain
from .dsl import parse_spec
from .formulas import formula_product_chain
from .graph import FamilyKind, Graph

logger = logging.getLogger(__name__)

COLUMNS = ["instance", "dim_w", "formula", "construction", "brute_force", "status"]


def instances(family: str, max_n: int) -> List[str]:
    """各族的实例描述"""
    if max_n < 1:
        raise ParameterError(f"max-n 必须为正，得到 {max_n}", "certifier")
    if family == "paths":
        specs = [f"path({n})" for n in range(2, max_n + 1)]
        specs += [f"prod(path(2),path({n}))" for n in range(2, max_n + 1)]
    elif family == "stars":
        specs = [f"star({a})" for a in range(1, max_n + 1)]
        specs += [f"prod(star(2),star({a}))" for a in range(1, max_n + 1)]
    elif family == "thetas":
        top = max(4, max_n)
        specs = [f"theta({k},{l})" for k in range(4, top + 1) for l in range(4, k + 1)]
    elif family == "mixed":
        specs = [f"prod(path(2),star({a}))" for a in range(1, max_n + 1)]
        specs += [f"prod(star(2),path({n}))" for n in range(2, max_n + 1)]
        specs.append("prod(path(2),theta(4,4))")
    else:
        raise ParameterError(f"未知实例族 {family!r}", "certifier")
    return specs


def formula_steps(graph: Graph) -> Optional[List[Tuple]]:
    """把积图的因子翻译成递归公式的步骤，不支持时返回 None"""
    if not graph.factors:
        return None
    steps = []
    for spec in graph.factors:
        if spec.kind == FamilyKind.PATH and spec.params[0] >= 2:
            steps.append(("path", spec.params[0]))
        elif spec.kind == FamilyKind.STAR and spec.params[0] >= 1:
            steps.append(("star", spec.params[0]))
        elif spec.kind == FamilyKind.THETA and spec.params[1] >= 4:
            steps.append(("theta",) + spec.params)
        elif spec.kind == FamilyKind.COMPLETE and spec.params[0] == 2:
            steps.append(("path", 2))
        elif spec.build().order == 1:
            continue
        else:
            return None
    return steps


def verify_row(certifier: Certifier, text: str, r: int) -> Dict[str, object]:
    graph = parse_spec(text)
    row: Dict[str, object] = {column: None for column in COLUMNS}
    row["instance"] = text

    cert = certifier.certify(graph, r)
    row["dim_w"] = cert.lower
    row["status"] = cert.status.value

    steps = formula_steps(graph)
    if steps is not None:
        try:
            row["formula"] = formula_product_chain(steps, r).value
        except PercertError as e:
            logger.info("%s 公式不可用: %s", text, e.message)

    if is_chainable(graph) and r >= 1:
        try:
            row["construction"] = len(construct_product_chain(graph, r, certifier.optimal_set).total)
        except PercertError as e:
            logger.info("%s 构造不可用: %s", text, e.message)

    if graph.size <= certifier.settings.bruteforce_cap:
        row["brute_force"] = certifier.brute_force(graph, r, floor=0)[0]
    return row


def verify_suite(family: str, max_n: int, r: int, certifier: Optional[Certifier] = None) -> pd.DataFrame:
    """
    逐个实例比较 dim W、公式、构造与穷举

    Returns:
        DataFrame，列为 instance, dim_w, formula, construction, brute_force, status
    """
    if certifier is None:
        from ..deps import get_certifier

        certifier = get_certifier()
    rows = [verify_row(certifier, text, r) for text in instances(family, max_n)]
    df = pd.DataFrame(rows, columns=COLUMNS)
    for column in ("dim_w", "formula", "construction", "brute_force"):
        df[column] = df[column].astype("Int64")
    return df
