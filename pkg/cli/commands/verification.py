import argparse

from tabulate import tabulate

from cli.io import OutputDocument, add_equation_arguments, parse_equation, parse_x, parse_x_range
from cli.router import CommandRouter
from services.verification import verification_service

router = CommandRouter()


def _verify_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--x", help="single region bound")
    group.add_argument("--x-range", dest="x_range", help="inclusive range A..B")


@router.command(
    "verify",
    help="compare the closed forms with the brute-force oracle",
    arguments=[add_equation_arguments, _verify_arguments],
)
def cmd_verify(args: argparse.Namespace) -> OutputDocument:
    """Exit 0 iff every x at or above L matches; x below L is reported from the oracle only"""
    eq, echo = parse_equation(args)
    xs = parse_x_range(args.x_range) if args.x_range else range(parse_x(args.x), parse_x(args.x) + 1)
    outcome = verification_service.verify_range(eq, xs)

    rows = []
    for report in outcome.reports:
        status = ("match" if report.match else "MISMATCH") if report.applicable else report.note
        rows.append([report.x, report.oracle_count, report.formula_count if report.applicable else "-", status])
    text = tabulate(rows, headers=["x", "oracle", "formula", "status"])

    return OutputDocument(
        command="verify",
        input={**echo, "x": [xs.start, xs.stop - 1]},
        result={"all_match": outcome.all_match, "L": outcome.reports[0].L, "reports": outcome.reports},
        timing={"oracle_seconds": sum(report.elapsed for report in outcome.reports)},
        text=text,
        exit_code=0 if outcome.all_match else 4,
    )
