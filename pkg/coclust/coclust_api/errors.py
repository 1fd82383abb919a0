"""
Exception hierarchy shared by the library, the CLI and the HTTP service.
"""

from typing import Any, Optional


class CoclusterError(Exception):
    """Base class for every error raised by coclust_api."""


class EdgeListParseError(CoclusterError):
    """A line of an edge-list file could not be parsed."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidInputError(CoclusterError, ValueError):
    """Arguments violate a documented precondition."""


class ConfigurationError(CoclusterError):
    """Solver configuration is inconsistent with itself or with the graph."""


class BudgetNotMetError(CoclusterError):
    """Raised in strict-budget mode when the label count stays above the budget."""

    def __init__(self, message: str, report: Any):
        super().__init__(message)
        self.report = report


class AssignmentFormatError(CoclusterError):
    """An assignment file is malformed or violates the id rules."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class TokenMismatchError(CoclusterError):
    """Graph tokens and assignment tokens disagree."""


class SolverInvariantError(CoclusterError, RuntimeError):
    """Internal solver state is inconsistent."""
