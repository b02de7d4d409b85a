"""Registry of machine-checkable identities about Moufang sets."""

from .registry import (
    REGISTRY,
    CheckResult,
    Status,
    SuiteReport,
    Undefined,
    list_checks,
    results_from_json,
    run_check,
    run_suite,
)

__all__ = [
    "REGISTRY",
    "CheckResult",
    "Status",
    "SuiteReport",
    "Undefined",
    "list_checks",
    "results_from_json",
    "run_check",
    "run_suite",
]
