import argparse

from tabulate import tabulate

from cli.io import OutputDocument
from cli.router import CommandRouter
from services.pell import pell_service

router = CommandRouter()


def _pell_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tau", type=int, required=True)
    parser.add_argument("--terms", type=int, default=5, help="how many (u_m, v_m) to list")


@router.command("pell", help="continued fraction and fundamental solution of u^2 - tau v^2 = 1", arguments=[_pell_arguments])
def cmd_pell(args: argparse.Namespace) -> OutputDocument:
    cf = pell_service.cf_expand_sqrt(args.tau)
    fund = pell_service.fundamental_solution(args.tau)
    sequence = []
    for m, u, v in pell_service.pell_iter(fund):
        if m > max(args.terms, 1):
            break
        sequence.append({"m": m, "u": u, "v": v})

    text = "\n".join([
        f"sqrt({cf.tau}) = [{cf.a0}; ({', '.join(str(a) for a in cf.period)})]",
        f"fundamental solution: ({fund.alpha}, {fund.beta})",
        tabulate([[row["m"], row["u"], row["v"]] for row in sequence], headers=["m", "u_m", "v_m"]),
    ])
    return OutputDocument(
        command="pell",
        input={"tau": args.tau},
        result={
            "a0": cf.a0,
            "period": cf.period,
            "fundamental": {"alpha": fund.alpha, "beta": fund.beta},
            "sequence": sequence,
        },
        text=text,
    )
