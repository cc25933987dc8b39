"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class FreeGroupError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidLetter(FreeGroupError):
    pass


class AlphabetMismatch(FreeGroupError):
    pass


class WordSyntaxError(FreeGroupError):
    """A word string could not be parsed; ``position`` is the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BadElementIndex(FreeGroupError):
    pass


class NoCrossingEdge(FreeGroupError):
    pass


class NotConnected(FreeGroupError):
    """Raised when an operation needs a connected graph or covering.

    ``labels`` carries the per-vertex component labels when they are known.
    """

    def __init__(self, message: str, labels: tuple[int, ...] | None = None):
        super().__init__(message)
        self.labels = labels


class InfiniteIndex(FreeGroupError):
    """The folded graph is not a full covering; ``core`` holds it for inspection."""

    def __init__(self, message: str, core=None):
        super().__init__(message)
        self.core = core


class NotMember(FreeGroupError):
    pass


class DomainError(FreeGroupError):
    pass


class InvalidPermutation(FreeGroupError):
    pass
