"""
Typed result models for the verification suite.

A run produces one CheckResult per registered check, in registry order,
plus the convention flags the implementation had to pick.
"""

import math
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.core.utils import dumps_json


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class CheckResult(BaseModel):
    """One identity check.

    Attributes:
        name: Registry key, unique within a report.
        anchor: Where the identity comes from (equation / statement).
        residual: Measured deviation (absolute or relative, see detail).
        tolerance: Acceptance threshold for the residual.
        status: PASS iff residual <= tolerance; SKIP when not applicable.
        detail: Human-readable note (failure message, skip reason, mode).
    """
    name: str
    anchor: str
    residual: float
    tolerance: float
    status: CheckStatus
    detail: str = ""

    @classmethod
    def measured(cls, name: str, anchor: str, residual: float, tolerance: float, detail: str = "") -> "CheckResult":
        ok = math.isfinite(residual) and residual <= tolerance
        return cls(name=name, anchor=anchor, residual=float(residual), tolerance=tolerance,
                   status=CheckStatus.PASS if ok else CheckStatus.FAIL, detail=detail)

    @property
    def passed(self) -> bool:
        return self.status is not CheckStatus.FAIL


class VerificationReport(BaseModel):
    metadata: Dict[str, Any] = Field(default_factory=dict)
    conventions: Dict[str, str] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)
    gram_transformed: Optional[List[List[float]]] = None

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    @property
    def exit_code(self) -> int:
        return 0 if self.all_passed else 1

    def to_json(self) -> str:
        """Deterministic serialization: sorted keys, floats at 17 significant digits."""
        return dumps_json(self.model_dump(mode="json"), sort_keys=True)
