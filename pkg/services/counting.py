"""Closed-form counting of solutions in the rotated square |u| + |v| <= x.

Every logarithmic floor or ceiling is evaluated as a power comparison in
Z[sqrt(tau)]: floor(log_W Z) = max{m : W^m <= Z}. The mpmath evaluations in
this module exist only to cross-check the exact path.
"""
from typing import Dict, Optional, Tuple

import mpmath

from core.config import Settings, get_settings
from core.exceptions import ConsistencyError, ThresholdError
from core.logger import logger
from models.counting import (
    BranchCount,
    BranchParameters,
    BranchSolution,
    CountResult,
    SolutionSet,
    Thresholds,
)
from models.equation import LA2Equation, ReducedForm
from models.pell import PellFundamental
from models.quad_ring import QuadInt, QuadRing
from services.la2_core import LA2Service, la2_service
from services.pell import PellService, pell_service


class CountingService:
    """Thresholds, branch counts and the explicit solution set of a Z(1) equation"""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        la2: Optional[LA2Service] = None,
        pell: Optional[PellService] = None,
    ):
        self._settings = settings
        self.la2 = la2 or la2_service
        self.pell = pell or pell_service

    @property
    def settings(self) -> Settings:
        return self._settings or get_settings()

    @property
    def max_iterations(self) -> int:
        return self.settings.counting.n0_max_iter

    @property
    def float_precision(self) -> int:
        return self.settings.counting.float_precision

    @property
    def float_check(self) -> bool:
        return self.settings.counting.float_check

    def branch_parameters(self, reduced: ReducedForm, l: int) -> BranchParameters:
        self.la2.require_z1(reduced)
        ring = QuadRing.of(reduced.tau)
        root = ring.sqrt_tau
        lam, ed, half_d = reduced.lambda_, reduced.e_over_d, reduced.half_d
        sign_l = (-1) ** l

        lambda_below = (lam + sign_l * root).sign() < 0  # lambda < (-1)^(l-1) sqrt(tau)
        if lambda_below:
            P = 1 - lam - sign_l * root
            Q = (-1) ** ((l - 1) // 2) * (ed * lam - ed - half_d)
        else:
            P = 1 + lam + sign_l * root
            Q = (-1) ** ((l + 1) // 2) * (ed * lam + ed - half_d)

        low = -root + (1 - sign_l) // 2
        high = root - (1 + sign_l) // 2
        r_window = (low - lam).sign() < 0 and (lam - high).sign() < 0

        if P.sign() != 1:
            raise ConsistencyError(f"P_{l} = {P} is not positive")
        return BranchParameters(l=l, P=P, Q=Q, R=int(r_window), lambda_below=lambda_below, r_window=r_window)

    def compute_N0(self, reduced: ReducedForm, fund: PellFundamental) -> int:
        """Least m from which the branch norms are strictly increasing"""
        self.la2.require_z1(reduced)
        cap = self.max_iterations
        lam = abs(reduced.lambda_)
        shift = abs(reduced.shift_u)
        v_floor = abs(reduced.e_over_d)
        small_lambda = lam * lam < reduced.tau

        for m, u_m, v_m in self.pell.pell_iter(fund):
            if m > cap:
                break
            if v_m <= v_floor:
                continue
            if small_lambda and u_m > lam * v_m + shift:
                return m
            if not small_lambda and u_m < lam * v_m - shift:
                return m
        raise ConsistencyError(f"N0 search exceeded {cap} iterations", extra={"tau": str(reduced.tau)})

    @staticmethod
    def _nl_comparand(reduced: ReducedForm, l: int) -> QuadInt:
        """1 + |lambda| - (-1)^l sgn(lambda) sqrt(tau)"""
        lam = reduced.lambda_
        sgn = 1 if lam > 0 else -1
        return QuadInt(rational_part=1 + abs(lam), surd_part=-((-1) ** l) * sgn, tau=reduced.tau)

    def compute_Nl(self, reduced: ReducedForm, fund: PellFundamental, l: int) -> int:
        self.la2.require_z1(reduced)
        if reduced.lambda_ ** 2 < reduced.tau:
            return 1
        target = self._nl_comparand(reduced, l)
        # ceil(log_W(target / 2 sqrt(tau))) is never attained exactly, so it is the
        # least m with 2 sqrt(tau) W^m > target
        cap = self.max_iterations
        scaled = QuadInt(rational_part=0, surd_part=2, tau=reduced.tau) * fund.unit
        m = 1
        while not scaled > target:
            scaled = scaled * fund.unit
            m += 1
            if m > cap:
                raise ConsistencyError(f"N_{l} search exceeded {cap} iterations")
        return m

    def float_ceiling_Nl(
        self, reduced: ReducedForm, fund: PellFundamental, l: int, precision: Optional[int] = None
    ) -> int:
        """N_l through its logarithmic ceiling in mpmath; cross-check only"""
        if reduced.lambda_ ** 2 < reduced.tau:
            return 1
        precision = precision or self.float_precision
        with mpmath.workprec(precision):
            target = self._nl_comparand(reduced, l).to_mpf(precision)
            two_root = 2 * mpmath.sqrt(reduced.tau)
            ratio = (mpmath.log(target) - mpmath.log(two_root)) / mpmath.log(fund.unit.to_mpf(precision))
            return max(1, int(mpmath.ceil(ratio)))

    def _s_t_abs(self, reduced: ReducedForm, fund: PellFundamental, l: int, m: int) -> Tuple[int, int]:
        u_m, v_m = self.pell.pell_sequence(fund, m)
        s, t = self.la2.branch_point(reduced, l, u_m, v_m)
        return abs(s), abs(t)

    def branch_norm(self, reduced: ReducedForm, fund: PellFundamental, l: int, m: int) -> int:
        """|s_m^(l)| + |t_m^(l)|"""
        return sum(self._s_t_abs(reduced, fund, l, m))

    @staticmethod
    def branch_norm_closed_form(
        reduced: ReducedForm, fund: PellFundamental, params: BranchParameters, m: int
    ) -> int:
        """floor(P_l W^m / (2 sqrt(tau)) + Q_l) + R_l; equals branch_norm for m >= max(N0, N_l)"""
        tau = reduced.tau
        scaled = params.P * fund.unit ** m * QuadInt(rational_part=0, surd_part=1, tau=tau)
        return scaled.floor() // (2 * tau) + params.Q + params.R

    def compute_thresholds(self, reduced: ReducedForm, fund: PellFundamental) -> Thresholds:
        self.la2.require_z1(reduced)
        n0 = self.compute_N0(reduced, fund)
        n_l: Dict[int, int] = {}
        m_prime: Dict[int, int] = {}
        for l in (1, 2, 3, 4):
            n_l[l] = self.compute_Nl(reduced, fund, l)
            indices = (1, n0, n_l[l])
            pairs = [self._s_t_abs(reduced, fund, l, m) for m in indices]
            m_full = max(s for s, _ in pairs) + max(t for _, t in pairs)

            top = self._s_t_abs(reduced, fund, l, max(n0, n_l[l]))
            first = pairs[0]
            m_short = max(first[0], top[0]) + max(first[1], top[1])
            if m_full != m_short:
                raise ConsistencyError(
                    f"M'_{l} disagrees between its two forms: {m_full} != {m_short}",
                    extra={"l": str(l)},
                )
            m_prime[l] = m_full

        thresholds = Thresholds(
            N0=n0,
            N=n_l,
            M=m_prime,
            L=max(m_prime.values()),
            branches=[self.branch_parameters(reduced, l) for l in (1, 2, 3, 4)],
        )
        logger.debug(f"thresholds for tau={reduced.tau}: N0={n0}, N={n_l}, M'={m_prime}, L={thresholds.L}")
        return thresholds

    @staticmethod
    def _branch_k(params: BranchParameters, x: int) -> int:
        return x - params.R + 1 - params.Q

    def count_branch(
        self,
        reduced: ReducedForm,
        fund: PellFundamental,
        params: BranchParameters,
        x: int,
        thresholds: Optional[Thresholds] = None,
    ) -> int:
        """max{m >= 0 : P_l W^m <= 2 sqrt(tau) K}, K = floor(x) - R_l + 1 - Q_l"""
        thresholds = thresholds or self.compute_thresholds(reduced, fund)
        bound = thresholds.M[params.l]
        if x < bound:
            raise ThresholdError(
                f"x = {x} is below M'_{params.l} = {bound}; the closed form does not apply, use the oracle",
                x=x, threshold=bound,
            )
        k = self._branch_k(params, x)
        if k <= 0:
            raise ThresholdError(f"K = {k} is not positive for branch {params.l}", x=x, threshold=bound)

        target = QuadInt(rational_part=0, surd_part=2 * k, tau=reduced.tau)
        current = params.P
        if current > target:
            raise ConsistencyError(f"branch {params.l} has no solution with |s| + |t| <= {x} although x >= M'_l")
        m = 0
        step = current * fund.unit
        while step <= target:
            current, m = step, m + 1
            step = current * fund.unit
        return m

    def float_branch_count(
        self,
        reduced: ReducedForm,
        fund: PellFundamental,
        params: BranchParameters,
        x: int,
        precision: Optional[int] = None,
    ) -> int:
        """The logarithmic floor of the branch count in mpmath; cross-check only"""
        precision = precision or self.float_precision
        k = self._branch_k(params, x)
        with mpmath.workprec(precision):
            numerator = (
                mpmath.log(k)
                - mpmath.log(params.P.to_mpf(precision))
                + mpmath.log(2 * mpmath.sqrt(reduced.tau))
            )
            return int(mpmath.floor(numerator / mpmath.log(fund.unit.to_mpf(precision))))

    def count_at_threshold(self, reduced: ReducedForm, fund: PellFundamental, thresholds: Thresholds, l: int) -> int:
        """floor(N'_l): the largest m with |s_m| + |t_m| <= M'_l, found by direct scan"""
        bound = thresholds.M[l]
        count = 0
        for m, u_m, v_m in self.pell.pell_iter(fund):
            s, t = self.la2.branch_point(reduced, l, u_m, v_m)
            if abs(s) + abs(t) > bound:
                return count
            count = m

    def _prepare(self, eq: LA2Equation, x: int) -> Tuple[ReducedForm, PellFundamental, Thresholds]:
        reduced = self.la2.reduce(eq)
        self.la2.require_z1(reduced)
        fund = self.pell.fundamental_solution(reduced.tau)
        thresholds = self.compute_thresholds(reduced, fund)
        if x < thresholds.L:
            raise ThresholdError(
                f"x = {x} is below L = {thresholds.L}; the closed form does not apply",
                x=x, threshold=thresholds.L,
            )
        return reduced, fund, thresholds

    def count_details(self, eq: LA2Equation, x: int) -> CountResult:
        """Per-branch breakdown of the closed-form count.

        With the float check on, every branch count is recomputed through its
        logarithmic floor in mpmath and a disagreement raises ConsistencyError.
        """
        reduced, fund, thresholds = self._prepare(eq, x)
        branches = []
        for params in thresholds.branches:
            exact = self.count_branch(reduced, fund, params, x, thresholds)
            approx = None
            if self.float_check:
                approx = self.float_branch_count(reduced, fund, params, x)
                if approx != exact:
                    raise ConsistencyError(
                        f"float evaluation disagrees on branch {params.l}: {approx} vs exact {exact}",
                        extra={"l": str(params.l), "x": str(x)},
                    )
            branches.append(BranchCount(l=params.l, K=self._branch_k(params, x), count=exact, float_count=approx))
        total = 2 + sum(branch.count for branch in branches)
        logger.info(f"|D_A({x})| = {total} for {eq}")
        return CountResult(x=x, count=total, L=thresholds.L, branches=branches)

    def count_solutions(self, eq: LA2Equation, x: int) -> int:
        return self.count_details(eq, x).count

    def enumerate_solutions(self, eq: LA2Equation, x: int) -> SolutionSet:
        reduced, fund, thresholds = self._prepare(eq, x)
        counts = {
            params.l: self.count_branch(reduced, fund, params, x, thresholds) for params in thresholds.branches
        }
        branches: Dict[int, list] = {l: [] for l in counts}
        for m, u_m, v_m in self.pell.pell_iter(fund):
            if m > max(counts.values()):
                break
            for l, count in counts.items():
                if m <= count:
                    s, t = self.la2.branch_point(reduced, l, u_m, v_m)
                    branches[l].append(BranchSolution(m=m, u=s, v=t))

        solutions = SolutionSet(x=x, class0=list(self.la2.class0_solutions(reduced)), branches=branches)
        for u, v in solutions.points():
            if self.la2.evaluate(eq, u, v) != 0 or abs(u) + abs(v) > x:
                raise ConsistencyError(f"enumerated point ({u}, {v}) is not a solution inside |u| + |v| <= {x}")
        return solutions


counting_service = CountingService()


def branch_parameters(reduced: ReducedForm, l: int) -> BranchParameters:
    return counting_service.branch_parameters(reduced, l)


def compute_N0(reduced: ReducedForm, fund: PellFundamental) -> int:
    return counting_service.compute_N0(reduced, fund)


def compute_Nl(reduced: ReducedForm, fund: PellFundamental, l: int) -> int:
    return counting_service.compute_Nl(reduced, fund, l)


def float_ceiling_Nl(reduced: ReducedForm, fund: PellFundamental, l: int, precision: Optional[int] = None) -> int:
    return counting_service.float_ceiling_Nl(reduced, fund, l, precision)


def branch_norm(reduced: ReducedForm, fund: PellFundamental, l: int, m: int) -> int:
    return counting_service.branch_norm(reduced, fund, l, m)


def branch_norm_closed_form(reduced: ReducedForm, fund: PellFundamental, params: BranchParameters, m: int) -> int:
    return counting_service.branch_norm_closed_form(reduced, fund, params, m)


def compute_thresholds(reduced: ReducedForm, fund: PellFundamental) -> Thresholds:
    return counting_service.compute_thresholds(reduced, fund)


def count_branch(
    reduced: ReducedForm,
    fund: PellFundamental,
    params: BranchParameters,
    x: int,
    thresholds: Optional[Thresholds] = None,
) -> int:
    return counting_service.count_branch(reduced, fund, params, x, thresholds)


def float_branch_count(
    reduced: ReducedForm, fund: PellFundamental, params: BranchParameters, x: int, precision: Optional[int] = None
) -> int:
    return counting_service.float_branch_count(reduced, fund, params, x, precision)


def count_at_threshold(reduced: ReducedForm, fund: PellFundamental, thresholds: Thresholds, l: int) -> int:
    return counting_service.count_at_threshold(reduced, fund, thresholds, l)


def count_details(eq: LA2Equation, x: int) -> CountResult:
    return counting_service.count_details(eq, x)


def count_solutions(eq: LA2Equation, x: int) -> int:
    return counting_service.count_solutions(eq, x)


def enumerate_solutions(eq: LA2Equation, x: int) -> SolutionSet:
    return counting_service.enumerate_solutions(eq, x)
