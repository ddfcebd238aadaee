import pytest

from percert.config import Settings, get_settings
from percert.core.certifier import Certifier
from percert.db.models import CertificateStore
from percert.deps import set_certifier


@pytest.fixture(autouse=True)
def certifier(monkeypatch):
    """每个测试用独立的内存缓存，不读取外部 PERCERT_ 环境变量"""
    for name in ("BRUTEFORCE_CAP", "EXTRA_COLOURINGS", "COLOURING_SEED", "CACHE_PATH", "LOG_LEVEL", "OUTPUT_INDENT"):
        monkeypatch.delenv(f"PERCERT_{name}", raising=False)
    get_settings.cache_clear()
    instance = Certifier(Settings(), CertificateStore())
    set_certifier(instance)
    yield instance
    set_certifier(None)
    get_settings.cache_clear()
