"""Exception hierarchy shared across the package.

The CLI maps these onto its exit codes: parse errors exit 2, precondition
and argument errors exit 3, internal-consistency failures exit 4.
"""


class FnDecompError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(FnDecompError, ValueError):
    """An element or value sequence has the wrong length for its group."""


class DomainError(FnDecompError, ValueError):
    """A tuple component or residue lies outside its allowed range."""


class ArgumentError(FnDecompError, ValueError):
    """Arguments are structurally invalid for the requested operation."""


class PreconditionError(FnDecompError, ValueError):
    """A documented operation precondition does not hold.

    ``witness`` optionally carries the concrete object that violates the
    precondition (e.g. a derivative witness refuting decomposability).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CoverageError(FnDecompError, LookupError):
    """A phi map was queried outside its declared key domain."""


class ResourceError(FnDecompError, ValueError):
    """The requested computation exceeds a documented size guardrail."""


class ParseError(FnDecompError, ValueError):
    """Malformed text input; carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InternalConsistencyError(FnDecompError, RuntimeError):
    """A mathematically guaranteed invariant failed; this indicates a bug."""
