from enum import Enum
from math import gcd
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class LA2Equation(BaseModel):
    """Coefficients of a*u^2 + b*u*v + c*v^2 + d*u + e*v + f = 0

    Membership conditions (a > 0, unit content) are reported by classify rather
    than enforced here, so that near-misses can be diagnosed.
    """

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int]) -> "LA2Equation":
        if len(coeffs) != 6:
            raise ValueError(f"expected six coefficients, got {len(coeffs)}")
        return cls(**dict(zip("abcdef", coeffs)))

    @property
    def coefficients(self) -> Tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    @property
    def content(self) -> int:
        """gcd of all six coefficients"""
        g = 0
        for coeff in self.coefficients:
            g = gcd(g, coeff)
        return g

    def __str__(self) -> str:
        terms = []
        for coeff, mono in zip(self.coefficients, ("u²", "uv", "v²", "u", "v", "")):
            if coeff == 0:
                continue
            magnitude = abs(coeff)
            body = mono if magnitude == 1 and mono else f"{magnitude}{mono}"
            sign = "-" if coeff < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0 = 0"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return f"{text} = 0"


class Verdict(str, Enum):
    LA2 = "LA2"
    NOT_LA2 = "NotLA2"


class Condition(str, Enum):
    A_POSITIVE = "a>0"
    UNIT_CONTENT = "gcd=1"
    NONSQUARE_DISCRIMINANT = "(i)"
    D_DIVIDES_E = "(ii)"
    COEFFICIENT_DIVISIBILITY = "(iii)"
    N_DIVISIBILITY = "(iv)"


class ConditionFailure(BaseModel):
    condition: Condition
    detail: str


class DerivedQuantities(BaseModel):
    """Lagrange quantities; the optional fields are None when their divisibility fails"""

    D: int
    E: int
    F: int
    N: int
    lambda_: Optional[int] = Field(default=None, alias="lambda")
    tau: Optional[int] = None
    e_over_d: Optional[int] = None
    half_d: Optional[int] = None
    j: Optional[int] = None

    model_config = ConfigDict(frozen=True, populate_by_name=True)


class ClassificationReport(BaseModel):
    verdict: Verdict
    failed_conditions: List[ConditionFailure] = Field(default_factory=list)
    derived: DerivedQuantities
    content: int = Field(..., description="gcd of the coefficients")
    normalized: Optional[LA2Equation] = Field(
        default=None, description="The equation divided by its content, when the content exceeds 1"
    )
    j: Optional[int] = None
    a_is_one: Optional[bool] = Field(default=None, description="Verified consequence a = 1 for LA2 equations")

    @model_validator(mode="after")
    def _verdict_matches(self) -> "ClassificationReport":
        if (self.verdict == Verdict.LA2) != (not self.failed_conditions):
            raise ValueError("verdict must be LA2 exactly when no condition failed")
        return self

    @property
    def is_la2(self) -> bool:
        return self.verdict == Verdict.LA2

    @property
    def failed(self) -> List[Condition]:
        return [failure.condition for failure in self.failed_conditions]


class ReducedForm(BaseModel):
    """u~^2 - tau*v~^2 = j with (u~, v~) = (u + lambda*v + d/2, v + E/D)"""

    tau: int
    j: int
    lambda_: int = Field(..., alias="lambda")
    e_over_d: int
    half_d: int
    shift_u: int
    shift_v: int

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    @model_validator(mode="after")
    def _shifts(self) -> "ReducedForm":
        if self.shift_u != self.e_over_d * self.lambda_ - self.half_d or self.shift_v != -self.e_over_d:
            raise ValueError("inverse shifts do not match (E/D)*lambda - d/2 and -E/D")
        return self

    @classmethod
    def build(cls, tau: int, j: int, lam: int, e_over_d: int, half_d: int) -> "ReducedForm":
        return cls(
            tau=tau,
            j=j,
            lambda_=lam,
            e_over_d=e_over_d,
            half_d=half_d,
            shift_u=e_over_d * lam - half_d,
            shift_v=-e_over_d,
        )

    def forward(self, u: int, v: int) -> Tuple[int, int]:
        return u + self.lambda_ * v + self.half_d, v + self.e_over_d

    def inverse(self, u_t: int, v_t: int) -> Tuple[int, int]:
        return u_t - self.lambda_ * v_t + self.shift_u, v_t + self.shift_v

    def describe(self) -> str:
        def affine(var: str, coeff_v: int, const: int) -> str:
            text = var
            if coeff_v:
                text += f" {'+' if coeff_v > 0 else '−'} {'' if abs(coeff_v) == 1 else abs(coeff_v)}v"
            if const:
                text += f" {'+' if const > 0 else '−'} {abs(const)}"
            return text

        return (
            f"ũ² − {self.tau}ṽ² = {'−' if self.j < 0 else ''}{abs(self.j)}, "
            f"ũ = {affine('u', self.lambda_, self.half_d)}, "
            f"ṽ = {affine('v', 0, self.e_over_d)}"
        )
