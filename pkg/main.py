import sys
from typing import List, Optional

from cli.commands import counting, equation, pell, verification
from cli.io import OutputDocument
from cli.router import CommandRouter
from core.config import get_settings
from core.exceptions import ClassificationError, LA2Error
from core.logger import logger, set_level

cli_router = CommandRouter()

cli_router.include_router(equation.router)
cli_router.include_router(counting.router)
cli_router.include_router(verification.router)
cli_router.include_router(pell.router)


def _error_document(e: LA2Error, raw: List[str]) -> OutputDocument:
    logger.debug(f"{type(e).__name__}: {e.detail}")
    error = e.to_dict()
    if isinstance(e, ClassificationError) and e.report is not None:
        error["report"] = e.report
    return OutputDocument(
        command=next((token for token in raw if not token.startswith("-")), ""),
        error=error,
        text=f"error: {e.detail}",
        exit_code=e.exit_code,
    )


def main(argv: Optional[List[str]] = None) -> int:
    # settings follow the environment of this run, not of the first import
    get_settings.cache_clear()
    set_level(get_settings().logging.level)

    parser = cli_router.build_parser(
        prog="la2", description="Solve and count LA2-type quadratic Diophantine equations"
    )
    raw = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in raw
    try:
        args = parser.parse_args(raw)
        if args.verbose:
            set_level("DEBUG")
        document = args.handler(args)
    except LA2Error as e:
        document = _error_document(e, raw)

    if as_json:
        try:
            rendered = document.to_json()
        except LA2Error as e:
            document = _error_document(e, raw)
            rendered = document.to_json()
        print(rendered)
    else:
        for warning in document.warnings:
            print(f"warning: {warning}", file=sys.stderr)
        stream = sys.stderr if document.error else sys.stdout
        print(document.text, file=stream)
    return document.exit_code


if __name__ == "__main__":
    sys.exit(main())
