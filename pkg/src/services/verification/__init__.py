from src.services.verification.registry import (
    FLOW_START,
    Outcome,
    SuiteContext,
    get_all_checks,
    get_check,
    register_check,
)
from src.services.verification.suite import DEFAULT_CONVENTIONS, run_check, run_suite

__all__ = [
    "DEFAULT_CONVENTIONS",
    "FLOW_START",
    "Outcome",
    "SuiteContext",
    "get_all_checks",
    "get_check",
    "register_check",
    "run_check",
    "run_suite",
]
