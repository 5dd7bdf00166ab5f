import pytest

from matlc import config


@pytest.fixture(autouse=True)
def _fresh_config(monkeypatch):
    monkeypatch.setattr(config, "_active", None)
    yield
