r"""Exact arithmetic in the ring Z[sqrt(tau)].

Every inequality the counting formulas phrase through logarithms of quadratic
irrationals is decided here with integer arithmetic only.
"""
from enum import IntEnum
from math import isqrt
from typing import Union

import mpmath
from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.exceptions import DomainError, RingMismatchError


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


class QuadInt(BaseModel):
    """An element a + b*sqrt(tau) with integer a, b"""

    rational_part: int
    surd_part: int = 0
    tau: int = Field(..., gt=0)

    model_config = ConfigDict(frozen=True)

    def _same_ring(self, other: "QuadInt") -> None:
        if self.tau != other.tau:
            raise RingMismatchError(
                f"cannot combine elements of Z[sqrt({self.tau})] and Z[sqrt({other.tau})]"
            )

    def _lift(self, other: Union["QuadInt", int]) -> "QuadInt":
        if isinstance(other, QuadInt):
            self._same_ring(other)
            return other
        if isinstance(other, int):
            return QuadInt(rational_part=other, surd_part=0, tau=self.tau)
        raise TypeError(f"unsupported operand type {type(other).__name__}")

    def __add__(self, other: Union["QuadInt", int]) -> "QuadInt":
        other = self._lift(other)
        return QuadInt(
            rational_part=self.rational_part + other.rational_part,
            surd_part=self.surd_part + other.surd_part,
            tau=self.tau,
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadInt":
        return QuadInt(rational_part=-self.rational_part, surd_part=-self.surd_part, tau=self.tau)

    def __sub__(self, other: Union["QuadInt", int]) -> "QuadInt":
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> "QuadInt":
        return self._lift(other) - self

    def __mul__(self, other: Union["QuadInt", int]) -> "QuadInt":
        other = self._lift(other)
        a, b = self.rational_part, self.surd_part
        c, d = other.rational_part, other.surd_part
        return QuadInt(rational_part=a * c + b * d * self.tau, surd_part=a * d + b * c, tau=self.tau)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "QuadInt":
        if not isinstance(m, int) or m < 0:
            raise DomainError(f"exponent must be a nonnegative integer, got {m!r}")
        result = QuadInt(rational_part=1, surd_part=0, tau=self.tau)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def conjugate(self) -> "QuadInt":
        return QuadInt(rational_part=self.rational_part, surd_part=-self.surd_part, tau=self.tau)

    def norm(self) -> int:
        return self.rational_part ** 2 - self.tau * self.surd_part ** 2

    def sign(self) -> int:
        a, b = self.rational_part, self.surd_part
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        lhs, rhs = a * a, b * b * self.tau
        # a + b*sqrt(tau) = 0 with (a, b) != (0, 0) needs tau to be a square
        if lhs == rhs:
            raise DomainError(f"tau = {self.tau} is a perfect square; the sign of {self} is not decidable in Z[sqrt(tau)]")
        if a > 0:
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    def compare(self, other: Union["QuadInt", int]) -> Ordering:
        return Ordering((self - other).sign())

    def __lt__(self, other: Union["QuadInt", int]) -> bool:
        return self.compare(other) is Ordering.LESS

    def __le__(self, other: Union["QuadInt", int]) -> bool:
        return self.compare(other) is not Ordering.GREATER

    def __gt__(self, other: Union["QuadInt", int]) -> bool:
        return self.compare(other) is Ordering.GREATER

    def __ge__(self, other: Union["QuadInt", int]) -> bool:
        return self.compare(other) is not Ordering.LESS

    def floor(self) -> int:
        """Exact floor of a + b*sqrt(tau)"""
        a, b = self.rational_part, self.surd_part
        root = isqrt(b * b * self.tau)
        if b >= 0:
            return a + root
        # b*sqrt(tau) is irrational for b != 0, so its ceiling is root + 1
        return a - root - 1

    def to_mpf(self, precision: int = 256) -> mpmath.mpf:
        with mpmath.workprec(precision):
            return mpmath.mpf(self.rational_part) + mpmath.mpf(self.surd_part) * mpmath.sqrt(self.tau)

    def __str__(self) -> str:
        a, b = self.rational_part, self.surd_part
        if b == 0:
            return str(a)
        surd = f"√{self.tau}" if abs(b) == 1 else f"{abs(b)}√{self.tau}"
        if a == 0:
            return surd if b > 0 else f"-{surd}"
        return f"{a} {'+' if b > 0 else '-'} {surd}"


class QuadRing(BaseModel):
    """Ambient ring context; guarantees tau is a positive nonsquare"""

    tau: int

    model_config = ConfigDict(frozen=True)

    @field_validator("tau")
    @classmethod
    def _nonsquare(cls, value: int) -> int:
        if value <= 0 or is_perfect_square(value):
            raise ValueError(f"tau must be a positive nonsquare integer, got {value}")
        return value

    @classmethod
    def of(cls, tau: int) -> "QuadRing":
        """Build a ring context, raising DomainError instead of a validation error"""
        if tau <= 0 or is_perfect_square(tau):
            raise DomainError(f"tau must be a positive nonsquare integer, got {tau}")
        return cls(tau=tau)

    def __call__(self, rational_part: int, surd_part: int = 0) -> QuadInt:
        return QuadInt(rational_part=rational_part, surd_part=surd_part, tau=self.tau)

    @property
    def zero(self) -> QuadInt:
        return self(0, 0)

    @property
    def one(self) -> QuadInt:
        return self(1, 0)

    @property
    def sqrt_tau(self) -> QuadInt:
        return self(0, 1)


def qi_add(x: QuadInt, y: QuadInt) -> QuadInt:
    return x + y


def qi_neg(x: QuadInt) -> QuadInt:
    return -x


def qi_sub(x: QuadInt, y: QuadInt) -> QuadInt:
    return x - y


def qi_mul(x: QuadInt, y: QuadInt) -> QuadInt:
    return x * y


def qi_pow(x: QuadInt, m: int) -> QuadInt:
    return x ** m


def qi_sign(x: QuadInt) -> int:
    return x.sign()


def qi_compare(x: QuadInt, y: QuadInt) -> Ordering:
    x._same_ring(y)
    return x.compare(y)


def qi_floor(x: QuadInt) -> int:
    return x.floor()


def qi_to_mpf(x: QuadInt, precision: int = 256) -> mpmath.mpf:
    """Approximate value for cross-checks only; never used to decide a comparison"""
    return x.to_mpf(precision)
