"""
Dependencies - shared state to avoid circular imports
"""
from typing import Optional

from .core.certifier import Certifier

# Global certifier instance, created on first use
_certifier: Optional[Certifier] = None


def set_certifier(certifier: Optional[Certifier]):
    global _certifier
    _certifier = certifier


def get_certifier() -> Certifier:
    global _certifier
    if _certifier is None:
        _certifier = Certifier()
    return _certifier
