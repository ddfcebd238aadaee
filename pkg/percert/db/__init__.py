from .models import CertificateStore

__all__ = ["CertificateStore"]
