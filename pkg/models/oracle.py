from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

Point = Tuple[int, int]


class OracleReport(BaseModel):
    """Ground-truth solution set of an equation inside |u| + |v| <= x"""

    x: int = Field(..., ge=0)
    solutions: List[Point] = Field(default_factory=list, description="Sorted lexicographically by (u, v)")
    count: int = Field(..., ge=0)
    elapsed: float = Field(default=0.0, exclude=True, description="Wall-clock seconds spent scanning")

    @model_validator(mode="after")
    def _count_matches(self) -> "OracleReport":
        if self.count != len(self.solutions):
            raise ValueError("count must equal the number of solutions")
        if any(abs(u) + abs(v) > self.x for u, v in self.solutions):
            raise ValueError(f"solution outside |u| + |v| <= {self.x}")
        return self


class VerificationReport(BaseModel):
    x: int
    L: int
    applicable: bool = Field(..., description="floor(x) >= L, so the closed forms apply")
    oracle_count: int
    formula_count: Optional[int] = None
    match: Optional[bool] = None
    missing: List[Point] = Field(default_factory=list, description="In the oracle set but not enumerated")
    extra: List[Point] = Field(default_factory=list, description="Enumerated but not in the oracle set")
    note: Optional[str] = None
    elapsed: float = Field(default=0.0, exclude=True)


class RangeVerification(BaseModel):
    reports: List[VerificationReport]

    @property
    def all_match(self) -> bool:
        """Every applicable x matched; informational below-L reports do not count against it"""
        return all(report.match for report in self.reports if report.applicable)
