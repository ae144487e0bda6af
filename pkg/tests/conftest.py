import numpy as np
import pytest

from discordlib.config import ConfigManager
from discordlib.logging import Logger


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Start every test from the packaged default configuration"""
    monkeypatch.delenv("DISCORDLIB_CONFIG_FILE", raising=False)
    monkeypatch.delenv("DISCORDLIB_ENV", raising=False)
    monkeypatch.delenv("DISCORD_DYN_THREADS", raising=False)
    ConfigManager.reset()
    ConfigManager.initialize_global_config()
    yield
    ConfigManager.reset()
    Logger.reset()
    Logger.initialize()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
