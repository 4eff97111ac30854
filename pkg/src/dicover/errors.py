"""Exception hierarchy shared across the package."""


class DicoverError(Exception):
    """Base class for all errors raised by dicover."""


class StructureError(DicoverError):
    """Malformed precubical data: dangling or out-of-range face entries."""


class ValidationError(DicoverError):
    """A precubical set violates the cubical face identities."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class DomainError(DicoverError, ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(DicoverError, ValueError):
    """An input fails a documented precondition (not a cycle, not a loop, ...)."""


class SearchLimitError(DicoverError):
    """A bounded search was refused because it would exceed its cap."""


class UncertifiedError(DicoverError):
    """A verdict was requested on a cover ball with unresolved merges."""


class OutOfWindowError(DicoverError):
    """A lifted path left the finite window of a cover ball."""


class CertificateError(DicoverError, AssertionError):
    """An internal consistency certificate failed; indicates a bug."""


class ParseError(DicoverError):
    """Malformed input text. ``line`` is 1-based, or None if not line-specific."""

    def __init__(self, message, line=None):
        self.line = line
        self.message = message
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
