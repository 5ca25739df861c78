import argparse

from tabulate import tabulate

from cli.io import OutputDocument, add_equation_arguments, parse_equation
from cli.router import CommandRouter
from core.logger import logger
from services.la2_core import la2_service

router = CommandRouter()


@router.command("classify", help="check the LA2 conditions", arguments=[add_equation_arguments])
def cmd_classify(args: argparse.Namespace) -> OutputDocument:
    """Exit 0 for LA2, 2 for NotLA2 with every failed condition listed"""
    eq, echo = parse_equation(args)
    report = la2_service.classify(eq)
    derived = report.derived

    lines = [f"{eq}", f"verdict: {report.verdict.value}"]
    if report.is_la2:
        lines.append(f"j = {report.j}, tau = {derived.tau}, lambda = {derived.lambda_}")
    else:
        rows = [[failure.condition.value, failure.detail] for failure in report.failed_conditions]
        lines.append(tabulate(rows, headers=["condition", "detail"]))
        if report.normalized is not None:
            lines.append(f"normalized: {report.normalized}")
    lines.append(f"D = {derived.D}, E = {derived.E}, F = {derived.F}, N = {derived.N}")

    return OutputDocument(
        command="classify",
        input=echo,
        result=report,
        text="\n".join(lines),
        exit_code=0 if report.is_la2 else 2,
    )


@router.command("reduce", help="rewrite an LA2 equation as u~^2 - tau v~^2 = j", arguments=[add_equation_arguments])
def cmd_reduce(args: argparse.Namespace) -> OutputDocument:
    eq, echo = parse_equation(args)
    reduced = la2_service.reduce(eq)
    warnings = []
    if reduced.j != 1:
        warnings.append(f"equation belongs to Z({reduced.j}); only Z(1) is solvable")
    description = reduced.describe()
    return OutputDocument(
        command="reduce",
        input=echo,
        result={**reduced.model_dump(by_alias=True), "description": description},
        warnings=warnings,
        text=description,
    )


def _generate_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lambda", dest="lam", type=int, required=True)
    parser.add_argument("--tau", type=int, required=True)
    parser.add_argument("--p", type=int, required=True, help="E/D of the generated equation")
    parser.add_argument("--q", type=int, required=True, help="d/2 of the generated equation")


@router.command("generate", help="build the Z(1) equation with given lambda, tau, p, q", arguments=[_generate_arguments])
def cmd_generate(args: argparse.Namespace) -> OutputDocument:
    eq = la2_service.make_z1_equation(args.lam, args.tau, args.p, args.q)
    logger.info(f"generated {eq}")
    return OutputDocument(
        command="generate",
        input={"lambda": args.lam, "tau": args.tau, "p": args.p, "q": args.q},
        result=eq.model_dump(),
        text=f"{eq}\n{' '.join(str(coeff) for coeff in eq.coefficients)}",
    )
