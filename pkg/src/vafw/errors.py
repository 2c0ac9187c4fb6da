"""Error and warning types shared across the package.

Every domain failure raises :class:`VafError` (or a subclass) carrying a
machine-readable ``code`` so the CLI and HTTP layers can map failures without
parsing messages.
"""
from __future__ import annotations


class VafError(Exception):
    """Domain error with a machine-readable code and a human message."""

    def __init__(self, code: str, message: str, **details):
        super().__init__(message)
        self.code = code
        self.message = message
        self.details = details

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class ValidationError(VafError):
    """A framework description violated one or more structural invariants.

    ``issues`` holds every violation as a ``(code, message)`` pair; nothing is
    reported piecemeal, so callers see the full damage in one error.
    """

    def __init__(self, issues):
        self.issues = tuple(issues)
        codes = ", ".join(sorted({code for code, _ in self.issues}))
        super().__init__("InvalidFramework", f"invalid framework ({codes})")


class FrameworkSyntaxError(VafError):
    """Unparseable framework text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__("SyntaxError", f"{message} (line {line}, column {column})",
                         line=line, column=column)
        self.line = line
        self.column = column


class SchemaError(VafError):
    """Parseable text whose shape is wrong; names the offending field."""

    def __init__(self, field: str, message: str):
        super().__init__("SchemaError", f"{field}: {message}", field=field)
        self.field = field


class DuplicateAttackWarning(UserWarning):
    """Emitted when duplicate attack pairs in an input are dropped."""
