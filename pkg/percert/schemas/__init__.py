from .graph import ColouringFile, ColouringRecord, GraphFile
from .reports import (
    CertificateReport,
    ConstructionReport,
    DimWReport,
    ErrorReport,
    FamilyCheckReport,
    FormulaReport,
    PercolationReport,
)

__all__ = [
    "GraphFile",
    "ColouringFile",
    "ColouringRecord",
    "CertificateReport",
    "ConstructionReport",
    "DimWReport",
    "ErrorReport",
    "FamilyCheckReport",
    "FormulaReport",
    "PercolationReport",
]
