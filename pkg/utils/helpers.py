from decimal import Decimal, InvalidOperation
from fractions import Fraction
from math import floor
from typing import Any, Optional
import json

from pydantic import BaseModel


def stringify_ints(data: Any) -> Any:
    """Turn every integer (keys included) into a decimal string; booleans stay booleans"""
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json", by_alias=True)
    if isinstance(data, bool) or data is None:
        return data
    if isinstance(data, int):
        return str(data)
    if isinstance(data, dict):
        return {str(key): stringify_ints(value) for key, value in data.items()}
    if isinstance(data, (list, tuple, set)):
        return [stringify_ints(item) for item in data]
    return data


def safe_json_loads(data: str, default: Any = None) -> Any:
    """Safely load JSON data"""
    try:
        return json.loads(data)
    except (json.JSONDecodeError, TypeError):
        return default


def safe_json_dumps(data: Any, default: Optional[str] = None) -> str:
    """Dump data to deterministic, strict JSON with integers as strings.

    Serialization errors propagate unless a `default` is given to return instead.
    """
    try:
        return json.dumps(stringify_ints(data), sort_keys=True, ensure_ascii=False, allow_nan=False)
    except (TypeError, ValueError):
        if default is None:
            raise
        return default


def floor_decimal(text: str) -> Optional[int]:
    """Exact floor of a decimal literal such as "34" or "34.9"; None if it does not parse"""
    try:
        value = Decimal(text.strip())
    except (InvalidOperation, AttributeError):
        return None
    if not value.is_finite():
        return None
    return floor(Fraction(value))
