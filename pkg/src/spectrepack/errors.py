"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: parse/validation/domain
problems exit 2, guard refusals exit 3.
"""


class SpectrePackError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SpectrePackError):
    """Malformed textual input (edge list, graph6, generator spec)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(SpectrePackError):
    """Input violates a structural invariant (self-loop, duplicate edge, ...)."""


class DomainError(SpectrePackError):
    """Arguments outside an operation's domain (empty cut side, b=0, ...)."""


class NotApplicableError(SpectrePackError):
    """A bound or check does not apply; carries the failed condition."""

    def __init__(self, condition: str):
        super().__init__(f"not applicable: {condition}")
        self.condition = condition


class GuardRefusal(SpectrePackError):
    """An exhaustive procedure refused to run past its cost guard."""


class ConvergenceError(SpectrePackError):
    """The iterative eigenvalue solver failed to converge."""
