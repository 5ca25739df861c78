"""Brute-force ground truth for |u| + |v| <= x, independent of every closed form."""
import asyncio
import time
from math import isqrt
from typing import List, Optional, Set, Tuple

from core.config import Settings, get_settings
from core.exceptions import DomainError, OracleCapError
from core.logger import logger
from models.equation import LA2Equation
from models.oracle import OracleReport
from services.la2_core import evaluate

Point = Tuple[int, int]


class OracleService:
    """Lattice scans of the rotated square, capped by OracleConfig"""

    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings

    @property
    def settings(self) -> Settings:
        return self._settings or get_settings()

    @property
    def cap(self) -> int:
        return self.settings.oracle.cap

    @property
    def workers(self) -> int:
        return self.settings.oracle.workers

    def _check_bounds(self, x: int) -> None:
        if x < 0:
            raise DomainError(f"x must be nonnegative, got {x}")
        cap = self.cap
        if x > cap:
            raise OracleCapError(
                f"x = {x} exceeds the oracle cap {cap}; raise LA2_ORACLE_CAP to scan further",
                extra={"x": str(x), "cap": str(cap)},
            )

    @staticmethod
    def _roots_in_u(eq: LA2Equation, v: int, width: int) -> List[int]:
        """Integer u with |u| <= width solving the equation for this fixed v"""
        a = eq.a
        B = eq.b * v + eq.d
        C = eq.c * v * v + eq.e * v + eq.f

        if a == 0:
            if B == 0:
                return list(range(-width, width + 1)) if C == 0 else []
            if C % B:
                return []
            candidates = [-C // B]
        else:
            disc = B * B - 4 * a * C
            if disc < 0:
                return []
            root = isqrt(disc)
            if root * root != disc:
                return []
            candidates = []
            for numerator in {-B + root, -B - root}:
                if numerator % (2 * a) == 0:
                    candidates.append(numerator // (2 * a))
        return [u for u in candidates if abs(u) <= width]

    def _scan_rows(self, eq: LA2Equation, x: int, v_low: int, v_high: int) -> Set[Point]:
        found: Set[Point] = set()
        for v in range(v_low, v_high + 1):
            for u in self._roots_in_u(eq, v, x - abs(v)):
                found.add((u, v))
        return found

    @staticmethod
    def _scan_naive(eq: LA2Equation, x: int) -> Set[Point]:
        found: Set[Point] = set()
        for v in range(-x, x + 1):
            width = x - abs(v)
            for u in range(-width, width + 1):
                if evaluate(eq, u, v) == 0:
                    found.add((u, v))
        return found

    def brute_force_solutions(self, eq: LA2Equation, x: int, naive: bool = False) -> OracleReport:
        """Every integer solution with |u| + |v| <= x.

        Each row v is solved as a quadratic in u with an exact integer square root
        of the discriminant. `naive` evaluates every lattice point instead and is
        kept for cross-checking the row solver.
        """
        self._check_bounds(x)
        started = time.perf_counter()
        found = self._scan_naive(eq, x) if naive else self._scan_rows(eq, x, -x, x)
        elapsed = time.perf_counter() - started
        logger.debug(f"oracle scanned x={x} ({'naive' if naive else 'rows'}) in {elapsed:.3f}s: {len(found)} solutions")
        return OracleReport(x=x, solutions=sorted(found), count=len(found), elapsed=elapsed)

    @staticmethod
    def _chunks(x: int, workers: int) -> List[Tuple[int, int]]:
        total = 2 * x + 1
        workers = max(1, min(workers, total))
        size, rest = divmod(total, workers)
        bounds = []
        start = -x
        for index in range(workers):
            stop = start + size + (1 if index < rest else 0) - 1
            bounds.append((start, stop))
            start = stop + 1
        return bounds

    async def brute_force_solutions_async(
        self, eq: LA2Equation, x: int, workers: Optional[int] = None
    ) -> OracleReport:
        """Row solver with the v-range split into contiguous chunks scanned in worker threads"""
        self._check_bounds(x)
        workers = workers or self.workers
        started = time.perf_counter()
        parts = await asyncio.gather(
            *(asyncio.to_thread(self._scan_rows, eq, x, low, high) for low, high in self._chunks(x, workers))
        )
        found: Set[Point] = set().union(*parts)
        elapsed = time.perf_counter() - started
        logger.debug(f"oracle scanned x={x} with {workers} workers in {elapsed:.3f}s")
        return OracleReport(x=x, solutions=sorted(found), count=len(found), elapsed=elapsed)

    @staticmethod
    def lattice_bound(x: int) -> int:
        """floor(x)^2 + (floor(x) + 1)^2, the number of lattice points in the region"""
        return x * x + (x + 1) * (x + 1)


oracle_service = OracleService()


def brute_force_solutions(eq: LA2Equation, x: int, naive: bool = False) -> OracleReport:
    return oracle_service.brute_force_solutions(eq, x, naive)


async def brute_force_solutions_async(eq: LA2Equation, x: int, workers: Optional[int] = None) -> OracleReport:
    return await oracle_service.brute_force_solutions_async(eq, x, workers)


def lattice_bound(x: int) -> int:
    return oracle_service.lattice_bound(x)
