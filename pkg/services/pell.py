"""Pell equation u^2 - tau*v^2 = 1: continued fractions, fundamental solution,
the solution sequence (u_m, v_m) and the five-class partition of all solutions."""
from functools import lru_cache
from math import isqrt
from typing import Iterator, List, Optional, Tuple, Union

from core.config import Settings, get_settings
from core.exceptions import DomainError
from core.logger import logger
from models.pell import ContinuedFraction, PellFundamental, PellPoint, PellSign
from models.quad_ring import QuadRing


class PellService:
    """Continued-fraction Pell solver with a per-instance memo of fundamental solutions"""

    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings
        self._solve = lru_cache(maxsize=self.settings.pell.cache_size)(self._solve_fundamental)

    @property
    def settings(self) -> Settings:
        return self._settings or get_settings()

    @property
    def max_terms(self) -> int:
        return self.settings.pell.cf_max_terms

    @staticmethod
    def branch_signs(l: int) -> Tuple[int, int]:
        """Return ((-1)^floor(l/2), (-1)^floor((l-1)/2)), the u- and v-signs of class l"""
        if l not in (1, 2, 3, 4):
            raise DomainError(f"branch index must be in 1..4, got {l}")
        return (-1) ** (l // 2), (-1) ** ((l - 1) // 2)

    def cf_expand_sqrt(self, tau: int, max_terms: Optional[int] = None) -> ContinuedFraction:
        """Expand sqrt(tau) as [a0; period] with the integer (m, d, a) recurrence"""
        QuadRing.of(tau)
        if tau < 2:
            raise DomainError(f"tau must be at least 2, got {tau}")
        cap = max_terms or self.max_terms

        a0 = isqrt(tau)
        m, d, a = 0, 1, a0
        period: List[int] = []
        while True:
            m = d * a - m
            d = (tau - m * m) // d
            a = (a0 + m) // d
            period.append(a)
            if a == 2 * a0:
                break
            if len(period) >= cap:
                raise DomainError(
                    f"continued fraction of sqrt({tau}) exceeded {cap} period terms",
                    extra={"tau": str(tau), "cap": str(cap)},
                )
        logger.debug(f"sqrt({tau}): a0={a0}, period length {len(period)}")
        return ContinuedFraction(tau=tau, a0=a0, period=period)

    @staticmethod
    def convergents(cf: ContinuedFraction, count: int) -> Iterator[Tuple[int, int]]:
        """Yield the first `count` convergents p_k/q_k of sqrt(tau)"""
        p_prev, p = 1, cf.a0
        q_prev, q = 0, 1
        yield p, q
        k = 1
        r = len(cf.period)
        while k < count:
            a = cf.period[(k - 1) % r]
            p_prev, p = p, a * p + p_prev
            q_prev, q = q, a * q + q_prev
            yield p, q
            k += 1

    def _solve_fundamental(self, tau: int, max_terms: int) -> PellFundamental:
        cf = self.cf_expand_sqrt(tau, max_terms)
        r = len(cf.period)
        index = r - 1 if r % 2 == 0 else 2 * r - 1
        *_, (p, q) = self.convergents(cf, index + 1)
        return PellFundamental(tau=tau, alpha=p, beta=q)

    def fundamental_solution(self, tau: int) -> PellFundamental:
        """Minimal solution (alpha, beta) of u^2 - tau*v^2 = 1; memoized per tau"""
        return self._solve(tau, self.max_terms)

    def clear_cache(self) -> None:
        self._solve.cache_clear()

    @staticmethod
    def pell_iter(fund: PellFundamental) -> Iterator[Tuple[int, int, int]]:
        """Yield (m, u_m, v_m) for m = 1, 2, ... without bound"""
        alpha, beta, tau = fund.alpha, fund.beta, fund.tau
        u, v, m = alpha, beta, 1
        while True:
            yield m, u, v
            u, v = alpha * u + tau * beta * v, beta * u + alpha * v
            m += 1

    def pell_sequence(self, fund: PellFundamental, m: int) -> Tuple[int, int]:
        """(u_m, v_m), the m-th positive solution"""
        if m < 1:
            raise DomainError(f"sequence index must be positive, got {m}")
        for k, u, v in self.pell_iter(fund):
            if k == m:
                return u, v
        raise AssertionError("unreachable")

    @staticmethod
    def pell_floor_forms(fund: PellFundamental, m: int) -> Tuple[int, int]:
        """(u_m, v_m) through floor(W^m / 2) + 1 and floor(W^m / (2 sqrt(tau))), W = alpha + beta*sqrt(tau)"""
        if m < 1:
            raise DomainError(f"sequence index must be positive, got {m}")
        power = fund.unit ** m
        tau = fund.tau
        u = power.floor() // 2 + 1
        # W^m / (2 sqrt(tau)) = W^m * sqrt(tau) / (2 tau)
        v = (power * QuadRing.of(tau).sqrt_tau).floor() // (2 * tau)
        return u, v

    @staticmethod
    def pell_class_zero(sign: Optional[PellSign] = None) -> Union[PellPoint, Tuple[PellPoint, PellPoint]]:
        plus = PellPoint(u=1, v=0, class_index=0)
        minus = PellPoint(u=-1, v=0, class_index=0)
        if sign is None:
            return plus, minus
        return plus if sign == PellSign.PLUS else minus

    def pell_class_point(
        self, fund: PellFundamental, k: int, m: int = 1
    ) -> Union[PellPoint, Tuple[PellPoint, PellPoint]]:
        """Element of class k of the partition; for k = 0 both trivial points are returned"""
        if k == 0:
            return self.pell_class_zero()
        if k not in (1, 2, 3, 4):
            raise DomainError(f"class index must be in 0..4, got {k}")
        u, v = self.pell_sequence(fund, m)
        su, sv = self.branch_signs(k)
        return PellPoint(u=su * u, v=sv * v, class_index=k, order=m)


pell_service = PellService()


def branch_signs(l: int) -> Tuple[int, int]:
    return pell_service.branch_signs(l)


def cf_expand_sqrt(tau: int, max_terms: Optional[int] = None) -> ContinuedFraction:
    return pell_service.cf_expand_sqrt(tau, max_terms)


def convergents(cf: ContinuedFraction, count: int) -> Iterator[Tuple[int, int]]:
    return pell_service.convergents(cf, count)


def fundamental_solution(tau: int) -> PellFundamental:
    return pell_service.fundamental_solution(tau)


def pell_iter(fund: PellFundamental) -> Iterator[Tuple[int, int, int]]:
    return pell_service.pell_iter(fund)


def pell_sequence(fund: PellFundamental, m: int) -> Tuple[int, int]:
    return pell_service.pell_sequence(fund, m)


def pell_floor_forms(fund: PellFundamental, m: int) -> Tuple[int, int]:
    return pell_service.pell_floor_forms(fund, m)


def pell_class_zero(sign: Optional[PellSign] = None) -> Union[PellPoint, Tuple[PellPoint, PellPoint]]:
    return pell_service.pell_class_zero(sign)


def pell_class_point(fund: PellFundamental, k: int, m: int = 1) -> Union[PellPoint, Tuple[PellPoint, PellPoint]]:
    return pell_service.pell_class_point(fund, k, m)
