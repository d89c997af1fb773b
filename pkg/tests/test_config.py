# tests/test_config.py
import pytest
from pydantic import ValidationError

from hyperprime.core.config import Settings, get_settings
from hyperprime.schemas import CommandConfig
from hyperprime.schemas.command import split_labels


def test_defaults(clean_settings, monkeypatch):
    for key in ("HYPERPRIME_MAX_CARRIER", "HYPERPRIME_ZERO_SEARCH_CAP", "HYPERPRIME_ORACLE_CAP"):
        monkeypatch.delenv(key, raising=False)
    s = get_settings()
    assert s.HYPERPRIME_MAX_CARRIER == 16
    assert s.HYPERPRIME_ZERO_SEARCH_CAP == 12
    assert s.HYPERPRIME_ORACLE_CAP == 6
    assert s.HYPERPRIME_DETERMINISTIC is True


def test_env_override(clean_settings, monkeypatch):
    monkeypatch.setenv("HYPERPRIME_MAX_CARRIER", "9")
    monkeypatch.setenv("HYPERPRIME_LOG_LEVEL", "debug")
    s = get_settings()
    assert s.HYPERPRIME_MAX_CARRIER == 9
    assert s.HYPERPRIME_LOG_LEVEL == "DEBUG"


def test_non_positive_cap_rejected():
    with pytest.raises(ValidationError):
        Settings(HYPERPRIME_MAX_CARRIER=0)


def test_unknown_log_level_rejected():
    with pytest.raises(ValidationError):
        Settings(HYPERPRIME_LOG_LEVEL="loud")


def test_command_config_splits_labels():
    cfg = CommandConfig(subcommand="classify", sub="0, 2", theorems="phi-ideal-form,classical-ideal-form")
    assert cfg.sub == ["0", "2"]
    assert cfg.theorems == ["phi-ideal-form", "classical-ideal-form"]


def test_command_config_rejects_empty_sub():
    with pytest.raises(ValidationError):
        CommandConfig(subcommand="classify", sub=" , ")


def test_command_config_rejects_zero_cap():
    with pytest.raises(ValidationError):
        CommandConfig(subcommand="harness", max_carrier=0)


def test_split_keeps_bracketed_labels():
    assert split_labels("[0,2],[0,1,2]") == ["[0,2]", "[0,1,2]"]
    assert split_labels("(0,x),(1,y)") == ["(0,x)", "(1,y)"]
