"""Input parsing and output documents shared by every command."""
import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, field_validator

from core.exceptions import ConsistencyError, ParseError
from models.equation import LA2Equation
from utils.helpers import floor_decimal, safe_json_dumps, safe_json_loads, stringify_ints

COEFFICIENT_NAMES = ("a", "b", "c", "d", "e", "f")


class LA2ArgumentParser(argparse.ArgumentParser):
    """Raises ParseError on bad arguments so usage errors exit with code 1"""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise ParseError(f"{self.prog}: {message}")


class EquationInput(BaseModel):
    """Six coefficients as decimal integer strings of any length"""

    a: int = Field(..., description="Leading coefficient; must be positive")
    b: int
    c: int
    d: int
    e: int
    f: int

    @field_validator("*", mode="before")
    @classmethod
    def _integer_text(cls, value: Any) -> int:
        if isinstance(value, bool):
            raise ValueError("booleans are not coefficients")
        if isinstance(value, int):
            return value
        try:
            return int(str(value).strip())
        except ValueError:
            raise ValueError(f"{value!r} is not an integer")

    @field_validator("a")
    @classmethod
    def _positive_leading(cls, value: int) -> int:
        if value <= 0:
            raise ValueError(f"leading coefficient a = {value} must be positive")
        return value

    def to_equation(self) -> LA2Equation:
        return LA2Equation(a=self.a, b=self.b, c=self.c, d=self.d, e=self.e, f=self.f)


class OutputDocument(BaseModel):
    command: str
    input: Dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    warnings: List[str] = Field(default_factory=list)
    timing: Optional[Dict[str, float]] = None
    error: Optional[Dict[str, Any]] = None
    text: str = Field(default="", exclude=True, description="Human-readable rendering")
    exit_code: int = Field(default=0, exclude=True)

    def to_json(self) -> str:
        payload: Dict[str, Any] = {
            "command": self.command,
            "input": stringify_ints(self.input),
            "result": stringify_ints(self.result),
            "warnings": list(self.warnings),
        }
        if self.timing is not None:
            payload["timing"] = self.timing
        if self.error is not None:
            payload["error"] = stringify_ints(self.error)
        try:
            return safe_json_dumps(payload)
        except (TypeError, ValueError) as e:
            raise ConsistencyError(f"{self.command} produced a document that is not valid JSON: {e}")


def _read_json_input(source: str) -> Dict[str, Any]:
    raw = sys.stdin.read() if source == "-" else _read_file(source)
    data = safe_json_loads(raw)
    if isinstance(data, dict) and isinstance(data.get("result"), dict):
        # accept a whole `generate` document piped back in
        data = data["result"]
    if not isinstance(data, dict):
        raise ParseError(f"{source} does not hold a JSON object with keys a..f")
    return data


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")


def parse_equation(args: argparse.Namespace) -> Tuple[LA2Equation, Dict[str, Any]]:
    """Build the equation from positional coefficients, --coeffs or --input"""
    sources = [bool(args.coefficients), args.coeffs is not None, args.input is not None]
    if sum(sources) != 1:
        raise ParseError("give the coefficients exactly once: six positional values, --coeffs or --input")

    if args.input is not None:
        values = _read_json_input(args.input)
        missing = [name for name in COEFFICIENT_NAMES if name not in values]
        if missing:
            raise ParseError(f"JSON input lacks coefficient(s) {', '.join(missing)}")
    else:
        items = args.coefficients if args.coefficients else args.coeffs.split(",")
        if len(items) != 6:
            raise ParseError(f"expected six coefficients a..f, got {len(items)}")
        values = dict(zip(COEFFICIENT_NAMES, items))

    try:
        parsed = EquationInput(**{name: values[name] for name in COEFFICIENT_NAMES})
    except ValidationError as e:
        problems = "; ".join(f"{err['loc'][0]}: {err['msg']}" for err in e.errors())
        raise ParseError(f"invalid coefficients ({problems})")
    return parsed.to_equation(), parsed.model_dump()


def parse_x(text: str) -> int:
    value = floor_decimal(text)
    if value is None:
        raise ParseError(f"--x {text!r} is not a decimal number")
    if value < 0:
        raise ParseError(f"--x must be nonnegative, got {text}")
    return value


def parse_x_range(text: str) -> range:
    """Parse "A..B" as the inclusive integer range A..B"""
    low, sep, high = text.partition("..")
    if not sep:
        raise ParseError(f"--x-range {text!r} must look like A..B")
    start, stop = parse_x(low), parse_x(high)
    if start > stop:
        raise ParseError(f"--x-range {text!r} is empty")
    return range(start, stop + 1)


def add_equation_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("coefficients", nargs="*", metavar="COEFF", help="a b c d e f")
    parser.add_argument("--coeffs", help='comma separated "a,b,c,d,e,f"')
    parser.add_argument("--input", help='JSON file with keys a..f ("-" for stdin)')


def add_x_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--x", required=True, help="region bound; decimal literals are floored exactly")
    parser.add_argument(
        "--fallback-oracle", action="store_true", help="use brute force when x is below L instead of failing"
    )
