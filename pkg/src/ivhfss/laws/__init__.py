"""Executable classification of the algebra's claimed identities."""

from .checker import (
    CheckConfig,
    LawReport,
    check_law,
    replay,
    run_suite,
    suite_to_json,
)
from .registry import Law, registry

__all__ = [
    "CheckConfig",
    "Law",
    "LawReport",
    "check_law",
    "registry",
    "replay",
    "run_suite",
    "suite_to_json",
]
