"""Exception hierarchy shared by all palbraid modules."""

from __future__ import annotations


class BraidError(Exception):
    """Base class for every error raised by palbraid."""


class MalformedToken(BraidError, ValueError):
    """A token in a braid word text is not a signed integer."""


class OutOfRangeGenerator(BraidError, ValueError):
    """A generator index is zero or does not exist on the given strand count."""


class StrandMismatch(BraidError, ValueError):
    """Two braids that must share a strand count do not."""


class NotPalindromic(BraidError, ValueError):
    """A braid required to be palindromic is not.

    ``which`` names the offending component (``"first"``/``"second"``) when
    the error comes from pair validation, else ``None``.
    """

    def __init__(self, message: str, which: str | None = None):
        super().__init__(message)
        self.which = which


class NotFoundWithinBound(BraidError):
    """A bounded search exhausted its budget without finding anything.

    This is never a proof of nonexistence.
    """


class FactorizationNotFound(NotFoundWithinBound):
    """No palindromic factorization was found for a move's input component."""

    def __init__(self, message: str, which: str | None = None):
        super().__init__(message)
        self.which = which


class PreconditionFailed(BraidError):
    """A stabilization move is not applicable to the given pair."""


class TooManyCrossings(BraidError):
    """A state sum was requested on a diagram above the configured bound."""


class NonExactDivision(BraidError, ArithmeticError):
    """Polynomial division left a remainder where exactness was required."""


class ParseError(BraidError, ValueError):
    """A corpus, pair, move or trace text could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ReplayError(BraidError):
    """Replaying a move trace failed at ``step`` (0-based; ``len(steps)`` for the endpoint)."""

    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason
