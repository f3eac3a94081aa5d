"""Custom exceptions for the maximal independent set toolkit."""

from enum import IntEnum
from typing import Optional


class ExitCode(IntEnum):
    """Process exit codes used by the command line front end."""

    PASS = 0
    VIOLATION = 1
    INCONCLUSIVE = 2
    USAGE = 64
    PARSE = 65
    INTERNAL = 70


class ToolkitException(Exception):
    """Base exception for all toolkit errors."""

    def __init__(self, message: str, exit_code: int = ExitCode.INTERNAL):
        self.message = message
        self.exit_code = int(exit_code)
        super().__init__(self.message)


class ValidationError(ToolkitException):
    """Raised when an argument fails validation."""

    def __init__(self, message: str):
        super().__init__(message, exit_code=ExitCode.USAGE)


class DomainError(ValidationError):
    """Raised when a formula or family is undefined for the given parameters."""

    def __init__(self, message: str = "Parameters outside the domain"):
        super().__init__(message)


class VertexLimitError(ValidationError):
    """Raised when a vertex count exceeds a configured cap."""

    def __init__(self, message: str = "Vertex count exceeds the configured cap"):
        super().__init__(message)


class SweepLimitError(ValidationError):
    """Raised when a labeled sweep is requested above the exhaustion cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"Labeled exhaustion is capped at n={cap} (requested n={n}); "
            f"generate a canonical corpus and use a corpus sweep instead"
        )


class InvalidGraphError(ValidationError):
    """Raised when a graph or vertex set breaks its structural invariants."""

    def __init__(self, message: str = "Invalid graph"):
        super().__init__(message)


class ParseError(ToolkitException):
    """Raised when a graph6 string cannot be decoded."""

    def __init__(self, message: str = "Parse error", offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message, exit_code=ExitCode.PARSE)


class CorpusError(ParseError):
    """Raised when a corpus file contains a bad line."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(ToolkitException):
    """Raised when an enumeration exceeds its caller-configured output cap."""

    def __init__(self, message: str = "Output size limit exceeded"):
        super().__init__(message, exit_code=ExitCode.INTERNAL)
