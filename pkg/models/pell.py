from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.quad_ring import QuadInt


class PellSign(str, Enum):
    """Selects one of the two trivial solutions (+1, 0) and (-1, 0)"""
    PLUS = "plus"
    MINUS = "minus"


class ContinuedFraction(BaseModel):
    """Periodic continued fraction of sqrt(tau): [a0; period, period, ...]"""
    tau: int
    a0: int
    period: List[int] = Field(..., min_length=1)

    model_config = ConfigDict(frozen=True)


class PellFundamental(BaseModel):
    """Minimal solution (alpha, beta) of u^2 - tau*v^2 = 1 with alpha + beta*sqrt(tau) > 1"""

    tau: int = Field(..., ge=2)
    alpha: int = Field(..., gt=0)
    beta: int = Field(..., gt=0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_identity(self) -> "PellFundamental":
        if self.alpha ** 2 - self.tau * self.beta ** 2 != 1:
            raise ValueError(f"({self.alpha}, {self.beta}) does not solve u^2 - {self.tau}v^2 = 1")
        return self

    @property
    def unit(self) -> QuadInt:
        return QuadInt(rational_part=self.alpha, surd_part=self.beta, tau=self.tau)


class PellPoint(BaseModel):
    u: int
    v: int
    class_index: int = Field(..., ge=0, le=4)
    order: int = Field(default=1, ge=1)

    model_config = ConfigDict(frozen=True)

    def as_tuple(self) -> tuple:
        return (self.u, self.v)
