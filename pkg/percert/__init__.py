"""
percert - 图的 r-键自举渗流极小感染边集的计算与证书
"""
__version__ = "1.0.0"

__all__ = ["__version__"]
