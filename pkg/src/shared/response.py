"""Response rendering for the command line front end."""

import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional

from pydantic import BaseModel


class ReportEncoder(json.JSONEncoder):
    """JSON encoder for pydantic models, Fractions and enums."""

    def default(self, obj):
        if isinstance(obj, BaseModel):
            return obj.model_dump(mode="json")
        if isinstance(obj, Fraction):
            return f"{obj.numerator}/{obj.denominator}"
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        return super().default(obj)


def to_json(data: Any, indent: Optional[int] = 2) -> str:
    """Serialize data deterministically (sorted keys)."""
    return json.dumps(data, cls=ReportEncoder, indent=indent, sort_keys=True)


def success_response(
    data: Any = None,
    message: Optional[str] = None,
    output: str = "text",
) -> str:
    """
    Render a successful command result.

    Args:
        data: Result payload; in text mode a string or list of lines
        message: Optional message
        output: "text" or "json"

    Returns:
        Text to print on stdout
    """
    if output == "json":
        body: Dict[str, Any] = {"success": True, "data": data}
        if message:
            body["message"] = message
        return to_json(body)

    if data is None:
        return message or ""
    if isinstance(data, (list, tuple)):
        return "\n".join(str(line) for line in data)
    return str(data)


def error_response(
    message: str,
    exit_code: int = 70,
    error_code: Optional[str] = None,
    details: Optional[Dict[str, Any]] = None,
    output: str = "text",
) -> str:
    """
    Render an error.

    Args:
        message: Error message
        exit_code: Process exit code (default: 70)
        error_code: Optional error code
        details: Optional error details
        output: "text" or "json"

    Returns:
        Rendered error text
    """
    if output == "json":
        body: Dict[str, Any] = {
            "success": False,
            "error": {
                "message": message,
                "code": error_code or f"ERROR_{exit_code}",
            },
        }
        if details:
            body["error"]["details"] = details
        return to_json(body)

    return f"error: {message}"


def usage_error_response(message: str, output: str = "text") -> str:
    """Create a usage error response."""
    return error_response(message, exit_code=64, error_code="USAGE_ERROR", output=output)


def parse_error_response(
    message: str,
    details: Optional[Dict[str, Any]] = None,
    output: str = "text",
) -> str:
    """Create a parse error response."""
    return error_response(
        message, exit_code=65, error_code="PARSE_ERROR", details=details, output=output
    )
