"""Exception hierarchy.

Every error raised on bad input derives from :class:`EvidenceError`, which is a
``ValueError``. The CLI maps :class:`CapacityError` to exit code 2 and every
other :class:`EvidenceError` to exit code 1.
"""

from __future__ import annotations


class EvidenceError(ValueError):
    """Base class for all library errors.

    ``line`` and ``column`` are 1-based positions in a source document, or 0
    when the error is not tied to one.
    """

    line: int = 0
    column: int = 0

    def at(self, line: int, column: int = 0) -> "EvidenceError":
        self.line, self.column = line, column
        if line:
            self.args = (f"line {line}, column {column}: {self.args[0]}",) + self.args[1:]
        return self


class ValidationError(EvidenceError):
    """Input violates a structural invariant."""


class EmptyFrameError(ValidationError):
    pass


class DuplicateLabelError(ValidationError):
    pass


class BlankLabelError(ValidationError):
    pass


class EmptySetMassError(ValidationError):
    pass


class NegativeMassError(ValidationError):
    pass


class MassSumError(ValidationError):
    pass


class DuplicateSubsetError(ValidationError):
    pass


class FrameMismatchError(ValidationError):
    """A subset or distribution refers to elements outside the frame."""


class UnknownLabelError(ValidationError):
    pass


class DistributionError(ValidationError):
    pass


class UndefinedTransformError(EvidenceError):
    """The transform is not defined for this mass function."""


class CapacityError(EvidenceError):
    """Problem size exceeds a hard enumeration limit."""


class ConvergenceError(EvidenceError):
    pass


class ParseError(EvidenceError):
    """Malformed BPA document."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.reason = message
        super().__init__(message)
        self.at(line, column)
