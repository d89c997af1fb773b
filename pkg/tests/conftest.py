# tests/conftest.py
from pathlib import Path

import pytest

from hyperprime.core.config import get_settings
from hyperprime.formats.structure_file import load_structures

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


def _load(name: str):
    rings, modules = load_structures(FIXTURES / name)
    return rings[0], modules[0]


@pytest.fixture
def fix_a():
    """(ring R, module M) of the three-element ring acting on {0,1,2,3}."""
    return _load("fix_a.hyp")


@pytest.fixture
def fix_b():
    return _load("fix_b.hyp")


@pytest.fixture
def z2():
    return _load("z2.hyp")


@pytest.fixture
def z4():
    return _load("z4.hyp")


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture
def clean_settings():
    """Clears the settings cache around tests that override HYPERPRIME_* env vars."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
