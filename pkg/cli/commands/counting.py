import argparse
import asyncio
from typing import Dict, List

from tabulate import tabulate

from cli.io import OutputDocument, add_equation_arguments, add_x_arguments, parse_equation, parse_x
from cli.router import CommandRouter
from core.logger import logger
from models.counting import Thresholds
from models.equation import LA2Equation
from models.oracle import OracleReport
from services.counting import counting_service
from services.la2_core import la2_service
from services.oracle import oracle_service
from services.pell import pell_service

router = CommandRouter()

FALLBACK_WARNING = "below L: brute force used"


def run_oracle(eq: LA2Equation, x: int) -> OracleReport:
    workers = oracle_service.workers
    if workers > 1:
        return asyncio.run(oracle_service.brute_force_solutions_async(eq, x, workers))
    return oracle_service.brute_force_solutions(eq, x)


def _thresholds_of(eq: LA2Equation) -> Thresholds:
    reduced = la2_service.reduce(eq)
    la2_service.require_z1(reduced)
    return counting_service.compute_thresholds(reduced, pell_service.fundamental_solution(reduced.tau))


def _fallback(command: str, eq: LA2Equation, x: int, echo: Dict, L: int) -> OutputDocument:
    logger.warning(f"x = {x} is below L = {L}; using the brute-force oracle")
    report = run_oracle(eq, x)
    result: Dict = {"x": x, "L": L, "source": "oracle", "count": report.count}
    text = f"{report.count} (brute force, below L = {L})"
    if command == "enumerate":
        result["solutions"] = report.solutions
        text = "\n".join([text] + [f"({u}, {v})" for u, v in report.solutions])
    return OutputDocument(
        command=command,
        input={**echo, "x": x},
        result=result,
        warnings=[FALLBACK_WARNING],
        timing={"oracle_seconds": report.elapsed},
        text=text,
    )


@router.command("thresholds", help="N0, N_l, M'_l, L and the P/Q/R table", arguments=[add_equation_arguments])
def cmd_thresholds(args: argparse.Namespace) -> OutputDocument:
    eq, echo = parse_equation(args)
    reduced = la2_service.reduce(eq)
    la2_service.require_z1(reduced)
    fund = pell_service.fundamental_solution(reduced.tau)
    thresholds = counting_service.compute_thresholds(reduced, fund)

    rows = [
        [p.l, str(p.P), p.Q, p.R, p.branch_condition, thresholds.N[p.l], thresholds.M[p.l]]
        for p in thresholds.branches
    ]
    text = "\n".join([
        f"{reduced.describe()}",
        f"fundamental solution ({fund.alpha}, {fund.beta}), N0 = {thresholds.N0}, L = {thresholds.L}",
        tabulate(rows, headers=["l", "P_l", "Q_l", "R_l", "branch", "N_l", "M'_l"]),
    ])
    result = thresholds.model_dump()
    result["fundamental"] = {"alpha": fund.alpha, "beta": fund.beta}
    result["branches"] = [{**p.model_dump(), "P": str(p.P), "condition": p.branch_condition} for p in thresholds.branches]
    return OutputDocument(command="thresholds", input=echo, result=result, text=text)


@router.command("count", help="|D_A(x)| by the closed form", arguments=[add_equation_arguments, add_x_arguments])
def cmd_count(args: argparse.Namespace) -> OutputDocument:
    eq, echo = parse_equation(args)
    x = parse_x(args.x)
    thresholds = _thresholds_of(eq)
    if args.fallback_oracle and x < thresholds.L:
        return _fallback("count", eq, x, echo, thresholds.L)

    details = counting_service.count_details(eq, x)
    params = {p.l: p for p in thresholds.branches}
    rows = [
        [
            branch.l, str(params[branch.l].P), params[branch.l].Q, params[branch.l].R, branch.K,
            f"1..{branch.count}" if branch.count else "-", branch.count,
        ]
        for branch in details.branches
    ]
    text = "\n".join([
        f"|D_A({x})| = {details.count}  (L = {details.L}, 2 trivial solutions)",
        tabulate(rows, headers=["l", "P_l", "Q_l", "R_l", "K", "m range", "count"]),
    ])
    return OutputDocument(
        command="count", input={**echo, "x": x}, result={**details.model_dump(), "source": "formula"}, text=text
    )


@router.command("enumerate", help="the solutions inside |u| + |v| <= x", arguments=[add_equation_arguments, add_x_arguments])
def cmd_enumerate(args: argparse.Namespace) -> OutputDocument:
    eq, echo = parse_equation(args)
    x = parse_x(args.x)
    if args.fallback_oracle:
        L = _thresholds_of(eq).L
        if x < L:
            return _fallback("enumerate", eq, x, echo, L)

    solutions = counting_service.enumerate_solutions(eq, x)
    points: List = solutions.points()
    text = "\n".join([f"{len(points)} solutions"] + [f"({u}, {v})" for u, v in points])
    return OutputDocument(
        command="enumerate",
        input={**echo, "x": x},
        result={"x": x, "count": len(points), "source": "formula", "solutions": points},
        text=text,
    )
