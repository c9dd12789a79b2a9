"""Exceptions shared across the package.

The command line tool maps these onto distinct exit codes, so library code
should raise the most specific one that applies.
"""


class SchurMzvError(Exception):
    """Base class for all package errors."""


class ParseError(SchurMzvError):
    """Malformed textual input (tableau files, index strings, config)."""


class PreconditionError(SchurMzvError):
    """Structurally valid input that violates a documented precondition."""


class ResourceLimitError(SchurMzvError):
    """An enumeration or summation exceeded its configured budget."""


class InternalCheckError(SchurMzvError):
    """A self-consistency assertion failed; indicates a bug, not bad input."""
