from pathlib import Path

from percert.config import get_cache_path, get_settings
from percert.core.certifier import Certifier
from percert.core.dsl import parse_spec
from percert.db.models import CertificateStore
from percert.deps import get_certifier, set_certifier


def test_write_once():
    store = CertificateStore()
    first = store.put(("path(2)", 1), {"value": 1})
    second = store.put(("path(2)", 1), {"value": 2})
    assert first == second == {"value": 1}
    assert len(store) == 1
    assert store.get(("path(2)", 2)) is None


def test_sqlite_persistence(tmp_path):
    db = tmp_path / "cache" / "certs.db"
    CertificateStore(db).put(("star(3)", 2), {"value": 2})
    reopened = CertificateStore(db)
    assert reopened.get(("star(3)", 2)) == {"value": 2}
    assert reopened.put(("star(3)", 2), {"value": 9}) == {"value": 2}


def test_certifier_uses_persistent_cache(tmp_path):
    db = tmp_path / "certs.db"
    graph = parse_spec("prod(path(2),path(3))")
    first = Certifier(store=CertificateStore(db)).certify(graph, 2)
    second = Certifier(store=CertificateStore(db)).certify(graph, 2)
    assert first == second


def test_settings_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("PERCERT_BRUTEFORCE_CAP", "3")
    monkeypatch.setenv("PERCERT_CACHE_PATH", str(tmp_path / "c.db"))
    get_settings.cache_clear()
    assert get_settings().bruteforce_cap == 3
    assert get_cache_path() == Path(tmp_path / "c.db")


def test_defaults():
    settings = get_settings()
    assert settings.bruteforce_cap == 16
    assert settings.log_level == "WARNING"
    assert get_cache_path() is None


def test_default_certifier_is_created_lazily():
    set_certifier(None)
    created = get_certifier()
    assert created is get_certifier()
    assert created.settings.bruteforce_cap == 16
