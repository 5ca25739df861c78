import time
from typing import Iterable, List, Optional

from core.logger import logger
from models.equation import LA2Equation
from models.oracle import RangeVerification, VerificationReport
from services.counting import CountingService, counting_service
from services.oracle import OracleService, oracle_service

BELOW_L_NOTE = "below L: formula not applicable"


class VerificationService:
    """Runs the closed form and the oracle side by side"""

    def __init__(self, counting: Optional[CountingService] = None, oracle: Optional[OracleService] = None):
        self.counting = counting or counting_service
        self.oracle = oracle or oracle_service

    def verify(self, eq: LA2Equation, x: int) -> VerificationReport:
        """Compare the closed-form count and solution set with the oracle at one x"""
        la2, pell = self.counting.la2, self.counting.pell
        reduced = la2.reduce(eq)
        la2.require_z1(reduced)
        thresholds = self.counting.compute_thresholds(reduced, pell.fundamental_solution(reduced.tau))
        started = time.perf_counter()
        oracle = self.oracle.brute_force_solutions(eq, x)

        if x < thresholds.L:
            logger.info(f"x = {x} is below L = {thresholds.L}; reporting the oracle only")
            return VerificationReport(
                x=x, L=thresholds.L, applicable=False, oracle_count=oracle.count,
                note=BELOW_L_NOTE, elapsed=time.perf_counter() - started,
            )

        formula_count = self.counting.count_solutions(eq, x)
        enumerated = set(self.counting.enumerate_solutions(eq, x).points())
        truth = set(oracle.solutions)
        missing = sorted(truth - enumerated)
        extra = sorted(enumerated - truth)
        match = not missing and not extra and formula_count == oracle.count
        if not match:
            logger.error(f"closed form disagrees with the oracle at x = {x}: count {formula_count} vs {oracle.count}, missing {missing}, extra {extra}")
        return VerificationReport(
            x=x,
            L=thresholds.L,
            applicable=True,
            oracle_count=oracle.count,
            formula_count=formula_count,
            match=match,
            missing=missing,
            extra=extra,
            elapsed=time.perf_counter() - started,
        )

    def verify_range(self, eq: LA2Equation, xs: Iterable[int]) -> RangeVerification:
        reports: List[VerificationReport] = [self.verify(eq, x) for x in xs]
        return RangeVerification(reports=reports)


verification_service = VerificationService()


def verify(eq: LA2Equation, x: int) -> VerificationReport:
    return verification_service.verify(eq, x)


def verify_range(eq: LA2Equation, xs: Iterable[int]) -> RangeVerification:
    return verification_service.verify_range(eq, xs)
