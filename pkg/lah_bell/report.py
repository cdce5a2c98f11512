"""Result of a verification operation: counts comparisons, keeps every failing parameter set."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckReport:
    name: str
    params: Dict[str, Any] = field(default_factory=dict)
    checked: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return not self.failures and self.error is None

    def record(self, ok: bool, **context) -> bool:
        """Count one comparison; keep its context when it fails."""
        self.checked += 1
        if not ok:
            self.failures.append(context)
        return ok

    def expect_equal(self, lhs, rhs, **context) -> bool:
        return self.record(lhs == rhs, lhs=lhs, rhs=rhs, **context)

    def first_failure(self) -> Optional[Dict[str, Any]]:
        return self.failures[0] if self.failures else None
