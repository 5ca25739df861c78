from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.quad_ring import QuadInt

Point = Tuple[int, int]


class BranchParameters(BaseModel):
    """P_l, Q_l, R_l for one branch, with the conditions that selected them"""

    l: int = Field(..., ge=1, le=4)
    P: QuadInt
    Q: int
    R: int = Field(..., ge=0, le=1)
    lambda_below: bool = Field(..., description="lambda < (-1)^(l-1) sqrt(tau)")
    r_window: bool = Field(..., description="lambda lies strictly inside the R_l = 1 window")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _positive_p(self) -> "BranchParameters":
        if self.P.sign() != 1:
            raise ValueError(f"P_{self.l} = {self.P} must be positive")
        if self.R != int(self.r_window):
            raise ValueError("R must be 1 exactly inside the window")
        return self

    @property
    def branch_condition(self) -> str:
        relation = "<" if self.lambda_below else ">"
        sign = "" if self.l % 2 == 1 else "-"
        return f"λ {relation} {sign}√{self.P.tau}"


class Thresholds(BaseModel):
    N0: int = Field(..., ge=1)
    N: Dict[int, int]
    M: Dict[int, int]
    L: int = Field(..., ge=1)
    branches: List[BranchParameters] = Field(default_factory=list)

    @model_validator(mode="after")
    def _l_is_max(self) -> "Thresholds":
        if set(self.M) != {1, 2, 3, 4} or self.L != max(self.M.values()):
            raise ValueError("L must be the maximum of M'_1..M'_4")
        return self

    def branch(self, l: int) -> BranchParameters:
        return next(params for params in self.branches if params.l == l)


class BranchCount(BaseModel):
    l: int
    K: int = Field(..., description="floor(x) - R_l + 1 - Q_l")
    count: int = Field(..., ge=0)
    float_count: Optional[int] = Field(None, description="The logarithmic floor evaluated in high precision floats, when the check is on")


class CountResult(BaseModel):
    x: int
    count: int
    L: int
    branches: List[BranchCount]


class BranchSolution(BaseModel):
    m: int
    u: int
    v: int

    model_config = ConfigDict(frozen=True)


class SolutionSet(BaseModel):
    x: int
    class0: List[Point]
    branches: Dict[int, List[BranchSolution]]

    def points(self) -> List[Point]:
        found = list(self.class0)
        for l in sorted(self.branches):
            found.extend((sol.u, sol.v) for sol in self.branches[l])
        return sorted(found)

    @property
    def count(self) -> int:
        return len(self.class0) + sum(len(sols) for sols in self.branches.values())
