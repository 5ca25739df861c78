"""LA2-type classification, Lagrange reduction and explicit solution families."""
from typing import Dict, List, Optional, Set, Tuple

from core.exceptions import ClassificationError, ConsistencyError, DomainError, UnsupportedClassError
from core.logger import logger
from models.equation import (
    ClassificationReport,
    Condition,
    ConditionFailure,
    DerivedQuantities,
    LA2Equation,
    ReducedForm,
    Verdict,
)
from models.pell import PellFundamental
from models.quad_ring import QuadRing, is_perfect_square
from services.pell import PellService, pell_service

Point = Tuple[int, int]


def _exact_div(numerator: int, denominator: int) -> Optional[int]:
    if denominator == 0 or numerator % denominator:
        return None
    return numerator // denominator


class LA2Service:
    """Classifies general conics, reduces LA2 equations and transports Pell solutions back"""

    def __init__(self, pell: Optional[PellService] = None):
        self.pell = pell or pell_service

    @staticmethod
    def derive(eq: LA2Equation) -> DerivedQuantities:
        """D, E, F, N and the integral quantities that exist for this equation"""
        a, b, c, d, e, f = eq.coefficients
        D = b * b - 4 * a * c
        E = b * d - 2 * a * e
        F = d * d - 4 * a * f
        N = E * E - D * F
        return DerivedQuantities(
            D=D,
            E=E,
            F=F,
            N=N,
            lambda_=_exact_div(b, 2 * a) if a else None,
            tau=_exact_div(D, 4 * a * a) if a else None,
            e_over_d=_exact_div(E, D),
            half_d=_exact_div(d, 2 * a) if a else None,
            j=_exact_div(N, -4 * a * a * D) if a else None,
        )

    def classify(self, eq: LA2Equation) -> ClassificationReport:
        """Check every LA2 condition and report all failures"""
        a, b, c, d, _, _ = eq.coefficients
        derived = self.derive(eq)
        D, E, N = derived.D, derived.E, derived.N
        failures: List[ConditionFailure] = []

        if a <= 0:
            failures.append(ConditionFailure(condition=Condition.A_POSITIVE, detail=f"a = {a} is not positive"))
        content = eq.content
        normalized = None
        if content != 1:
            if content > 1:
                normalized = LA2Equation.from_coefficients([coeff // content for coeff in eq.coefficients])
            failures.append(ConditionFailure(
                condition=Condition.UNIT_CONTENT,
                detail=f"gcd of the coefficients is {content}; divide by it to normalize"
                + (f": {normalized}" if normalized else ""),
            ))
        if D <= 0:
            failures.append(ConditionFailure(
                condition=Condition.NONSQUARE_DISCRIMINANT, detail=f"D = {D} is not positive"))
        elif is_perfect_square(D):
            failures.append(ConditionFailure(
                condition=Condition.NONSQUARE_DISCRIMINANT, detail=f"D = {D} is a perfect square"))
        if derived.e_over_d is None:
            failures.append(ConditionFailure(condition=Condition.D_DIVIDES_E, detail=f"D = {D} does not divide E = {E}"))

        divisibility = []
        if a > 0:
            if b % (2 * a):
                divisibility.append(f"2a = {2 * a} does not divide b = {b}")
            if c % a:
                divisibility.append(f"a = {a} does not divide c = {c}")
            if d % (2 * a):
                divisibility.append(f"2a = {2 * a} does not divide d = {d}")
        else:
            divisibility.append("divisibility by a is undefined for a <= 0")
        if divisibility:
            failures.append(ConditionFailure(condition=Condition.COEFFICIENT_DIVISIBILITY, detail="; ".join(divisibility)))

        if derived.j is None:
            failures.append(ConditionFailure(
                condition=Condition.N_DIVISIBILITY, detail=f"4a²D = {4 * a * a * D} does not divide N = {N}"))

        if failures:
            logger.debug(f"{eq} is not LA2: {[failure.condition.value for failure in failures]}")
            return ClassificationReport(
                verdict=Verdict.NOT_LA2, failed_conditions=failures, derived=derived,
                content=content, normalized=normalized,
            )

        # every LA2 equation has a = 1: a divides all six coefficients and the content is 1
        a_divides_rest = eq.e % a == 0 and eq.f % a == 0
        a_is_one = a == 1
        if not (a_divides_rest and a_is_one):
            raise ConsistencyError(f"{eq} passed every LA2 condition but a = {a} != 1")
        return ClassificationReport(
            verdict=Verdict.LA2, derived=derived, content=content, j=derived.j, a_is_one=a_is_one,
        )

    def reduce(self, eq: LA2Equation) -> ReducedForm:
        """Rewrite an LA2 equation as u~^2 - tau*v~^2 = j"""
        report = self.classify(eq)
        if not report.is_la2:
            raise ClassificationError(
                f"{eq} is not LA2-type (failed {', '.join(c.value for c in report.failed)})", report=report
            )
        derived = report.derived
        reduced = ReducedForm.build(
            tau=derived.tau, j=derived.j, lam=derived.lambda_, e_over_d=derived.e_over_d, half_d=derived.half_d
        )
        logger.debug(f"{eq} reduces to tau={reduced.tau}, j={reduced.j}, lambda={reduced.lambda_}")
        return reduced

    @staticmethod
    def evaluate(eq: LA2Equation, u: int, v: int) -> int:
        """Value of the quadratic form at (u, v); zero exactly at solutions"""
        return eq.a * u * u + eq.b * u * v + eq.c * v * v + eq.d * u + eq.e * v + eq.f

    @staticmethod
    def require_z1(reduced: ReducedForm) -> None:
        if reduced.j != 1:
            raise UnsupportedClassError(reduced.j)

    def branch_point(self, reduced: ReducedForm, l: int, u_m: int, v_m: int) -> Point:
        """(s, t) for a known Pell pair (u_m, v_m) on branch l"""
        su, sv = self.pell.branch_signs(l)
        s = su * u_m - sv * reduced.lambda_ * v_m + reduced.shift_u
        t = sv * v_m + reduced.shift_v
        return s, t

    def branch_solution(self, reduced: ReducedForm, fund: PellFundamental, l: int, m: int) -> Point:
        """(s_m^(l), t_m^(l)), the image of the m-th class-l Pell solution"""
        self.require_z1(reduced)
        u_m, v_m = self.pell.pell_sequence(fund, m)
        return self.branch_point(reduced, l, u_m, v_m)

    def class0_solutions(self, reduced: ReducedForm) -> Tuple[Point, Point]:
        self.require_z1(reduced)
        return reduced.inverse(1, 0), reduced.inverse(-1, 0)

    def solution_families(self, reduced: ReducedForm, fund: PellFundamental, m_max: int) -> Dict[int, List[Point]]:
        """The five solution families truncated at m <= m_max, keyed by class index 0..4"""
        self.require_z1(reduced)
        families: Dict[int, List[Point]] = {0: list(self.class0_solutions(reduced))}
        for l in (1, 2, 3, 4):
            families[l] = []
        for m, u_m, v_m in self.pell.pell_iter(fund):
            if m > m_max:
                break
            for l in (1, 2, 3, 4):
                families[l].append(self.branch_point(reduced, l, u_m, v_m))
        return families

    def solutions_up_to(self, reduced: ReducedForm, fund: PellFundamental, m_max: int) -> Set[Point]:
        return {point for family in self.solution_families(reduced, fund, m_max).values() for point in family}

    @staticmethod
    def make_z1_equation(lam: int, tau: int, p: int, q: int) -> LA2Equation:
        """The Z(1) equation with lambda = lam, tau = tau, E/D = p and d/2 = q"""
        QuadRing.of(tau)
        if tau < 2:
            raise DomainError(f"tau must be at least 2, got {tau}")
        return LA2Equation(
            a=1,
            b=2 * lam,
            c=lam * lam - tau,
            d=2 * q,
            e=2 * lam * q - 2 * tau * p,
            f=q * q - tau * p * p - 1,
        )


la2_service = LA2Service()


def derive(eq: LA2Equation) -> DerivedQuantities:
    return la2_service.derive(eq)


def classify(eq: LA2Equation) -> ClassificationReport:
    return la2_service.classify(eq)


def reduce(eq: LA2Equation) -> ReducedForm:
    return la2_service.reduce(eq)


def evaluate(eq: LA2Equation, u: int, v: int) -> int:
    return la2_service.evaluate(eq, u, v)


def require_z1(reduced: ReducedForm) -> None:
    la2_service.require_z1(reduced)


def branch_point(reduced: ReducedForm, l: int, u_m: int, v_m: int) -> Point:
    return la2_service.branch_point(reduced, l, u_m, v_m)


def branch_solution(reduced: ReducedForm, fund: PellFundamental, l: int, m: int) -> Point:
    return la2_service.branch_solution(reduced, fund, l, m)


def class0_solutions(reduced: ReducedForm) -> Tuple[Point, Point]:
    return la2_service.class0_solutions(reduced)


def solution_families(reduced: ReducedForm, fund: PellFundamental, m_max: int) -> Dict[int, List[Point]]:
    return la2_service.solution_families(reduced, fund, m_max)


def solutions_up_to(reduced: ReducedForm, fund: PellFundamental, m_max: int) -> Set[Point]:
    return la2_service.solutions_up_to(reduced, fund, m_max)


def make_z1_equation(lam: int, tau: int, p: int, q: int) -> LA2Equation:
    return la2_service.make_z1_equation(lam, tau, p, q)
