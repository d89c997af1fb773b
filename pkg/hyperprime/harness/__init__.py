# hyperprime/harness/__init__.py
from .runner import harness, REQUIRED_COVERAGE
from .base import THEOREM_IDS
