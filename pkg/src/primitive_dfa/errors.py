"""
Exceptions raised by the package.

Every exception derives from `PrimitiveDfaError` and from the builtin that
best describes it, so callers can catch either.
"""

from typing import Optional


class PrimitiveDfaError(Exception):
    """
    The base for all exceptions raised by this package.
    """


class ParseError(PrimitiveDfaError, ValueError):
    """
    Malformed text input.
    """


class CycleSyntaxError(ParseError):
    """
    Cycle notation that does not follow `(a,b,...)(c,...)`.
    """


class PointRangeError(ParseError):
    """
    A point name outside of `1..degree`.
    """


class RepeatedPointError(ParseError):
    """
    A point appearing twice in one cycle-notation string.
    """


class DfaFileError(ParseError):
    """
    A syntax or semantic error in a DFA file.
    """

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class DegreeMismatchError(PrimitiveDfaError, ValueError):
    """
    Transformations or groups acting on different numbers of points.
    """


class AlphabetMismatchError(PrimitiveDfaError, ValueError):
    """
    DFAs that were expected to share an alphabet do not.
    """


class PreconditionError(PrimitiveDfaError, ValueError):
    """
    Input that does not satisfy the hypotheses of the requested operation.
    """


class LimitExceededError(PrimitiveDfaError, RuntimeError):
    """
    The computation would exceed a configured limit.
    """


class CapExceededError(LimitExceededError):
    """
    Group enumeration reached the element cap.
    """


class SizeLimitExceededError(LimitExceededError):
    """
    A brute-force sweep was requested for DFAs that are too large.
    """


class InconsistencyError(PrimitiveDfaError, RuntimeError):
    """
    Conditions that are proven equivalent disagreed.
    """

    def __init__(self, message: str) -> None:
        super().__init__(f"BUG: {message}")
