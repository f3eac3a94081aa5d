"""Validation utilities for the maximal independent set toolkit."""

from fractions import Fraction
from typing import Any, Optional

from .exceptions import ValidationError, VertexLimitError


# Comment marker for corpus files
COMMENT_PREFIX = "#"

# Optional header nauty tools may put in front of graph6 files
GRAPH6_HEADER = ">>graph6<<"


def validate_nonnegative_int(value: Any, name: str) -> int:
    """
    Validate a nonnegative integer parameter.

    Args:
        value: Value to validate
        name: Parameter name for error messages

    Returns:
        Validated integer

    Raises:
        ValidationError: If value is not a nonnegative integer
    """
    if isinstance(value, bool):
        raise ValidationError(f"{name} must be an integer")

    try:
        number = int(value)
    except (ValueError, TypeError):
        raise ValidationError(f"{name} must be an integer")

    if number != value and not isinstance(value, str):
        raise ValidationError(f"{name} must be an integer")

    if number < 0:
        raise ValidationError(f"{name} must be nonnegative")

    return number


def validate_minimum(value: Any, minimum: int, name: str) -> int:
    """
    Validate an integer parameter against a lower bound.

    Args:
        value: Value to validate
        minimum: Smallest allowed value
        name: Parameter name for error messages

    Returns:
        Validated integer

    Raises:
        ValidationError: If value is below the minimum
    """
    number = validate_nonnegative_int(value, name)

    if number < minimum:
        raise ValidationError(f"{name} must be at least {minimum} (got {number})")

    return number


def validate_vertex_count(n: int, cap: int, what: str = "graph") -> int:
    """
    Validate a vertex count against a cap.

    Args:
        n: Vertex count
        cap: Largest allowed vertex count
        what: Description of the object for error messages

    Returns:
        Validated vertex count

    Raises:
        VertexLimitError: If n exceeds the cap
    """
    n = validate_nonnegative_int(n, "n")

    if n > cap:
        raise VertexLimitError(f"{what} with {n} vertices exceeds the cap of {cap}")

    return n


def validate_vertex(n: int, v: Any) -> int:
    """
    Validate a vertex index.

    Args:
        n: Vertex count of the graph
        v: Vertex to validate

    Returns:
        Validated vertex

    Raises:
        ValidationError: If v is not in [0, n)
    """
    v = validate_nonnegative_int(v, "vertex")

    if v >= n:
        raise ValidationError(f"Vertex {v} out of range for a graph on {n} vertices")

    return v


def validate_vertex_bits(n: int, bits: int) -> int:
    """
    Validate that a bit-indexed vertex set lies inside [0, n).

    Args:
        n: Vertex count of the graph
        bits: Bit-indexed vertex set

    Returns:
        Validated bits

    Raises:
        ValidationError: If a member is out of range
    """
    if bits < 0:
        raise ValidationError("Vertex set bits must be nonnegative")

    if bits >> n:
        outside = (bits >> n).bit_length() + n - 1
        raise ValidationError(f"Vertex {outside} out of range for a graph on {n} vertices")

    return bits


def validate_positive_fraction(value: Any, name: str) -> Fraction:
    """
    Validate a positive rational parameter such as a precision or width.

    Args:
        value: Fraction, int, or decimal/scientific string like "1e-8"
        name: Parameter name for error messages

    Returns:
        Validated value as an exact Fraction

    Raises:
        ValidationError: If the value is not a positive rational
    """
    if isinstance(value, float):
        value = repr(value)

    try:
        fraction = Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ValidationError(f"{name} must be a positive rational number")

    if fraction <= 0:
        raise ValidationError(f"{name} must be positive")

    return fraction


def sanitize_graph6_line(line: str) -> Optional[str]:
    """
    Strip a corpus or stdin line down to its graph6 payload.

    Args:
        line: Raw input line

    Returns:
        The graph6 string, or None for blank and comment lines
    """
    if not isinstance(line, str):
        raise ValidationError("Input line must be a string")

    value = line.strip()

    if value.startswith(GRAPH6_HEADER):
        value = value[len(GRAPH6_HEADER):]

    if not value or value.startswith(COMMENT_PREFIX):
        return None

    return value
