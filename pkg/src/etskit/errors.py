"""Exception hierarchy shared across the toolkit."""

from __future__ import annotations


class EtsError(Exception):
    """Base class for all toolkit errors."""


class AlistParseError(EtsError):
    """Malformed alist input; carries the 1-based line number of the defect."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class GraphConstraintError(EtsError):
    """A graph violates a structural requirement (regularity, girth, ...)."""


class BindingError(EtsError):
    """A variable set was used with a graph it is not bound to."""


class NodeCapError(EtsError):
    """Canonical labeling was asked for a graph above the node cap."""
