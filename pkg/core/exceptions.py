from typing import Any, Dict, Optional


class LA2Error(Exception):
    """Base error carrying a process exit code and a human-readable detail"""

    exit_code: int = 1

    def __init__(self, detail: str, extra: Optional[Dict[str, Any]] = None):
        super().__init__(detail)
        self.detail = detail
        self.extra = extra or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"type": type(self).__name__, "detail": self.detail, "exit_code": self.exit_code, **self.extra}


class ParseError(LA2Error):
    exit_code = 1


class DomainError(LA2Error):
    """Argument outside the mathematical domain of an operation"""
    exit_code = 1


class RingMismatchError(DomainError):
    """Two Z[sqrt(tau)] elements with different radicands were combined"""


class OracleCapError(LA2Error):
    exit_code = 1


class ClassificationError(LA2Error):
    """The equation is not LA2-type; `report` holds the failed conditions"""
    exit_code = 2

    def __init__(self, detail: str, report: Any = None):
        super().__init__(detail)
        self.report = report


class UnsupportedClassError(LA2Error):
    exit_code = 2

    def __init__(self, j: int):
        super().__init__(
            f"equation belongs to Z({j}); solving and counting are only available for Z(1)",
            extra={"j": str(j)},
        )
        self.j = j


class ThresholdError(LA2Error):
    exit_code = 3

    def __init__(self, detail: str, x: int, threshold: int):
        super().__init__(detail, extra={"x": str(x), "threshold": str(threshold)})
        self.x = x
        self.threshold = threshold


class ConsistencyError(LA2Error):
    """Internal cross-check failed; indicates a bug, never a user error"""
    exit_code = 4
