"""Exception types shared across the package."""

from __future__ import annotations


class EngineError(Exception):
    """Base class for every error this package raises deliberately."""


class DuplicateLabelError(EngineError):
    pass


class DuplicateGeneratorError(EngineError):
    pass


class WeightOutOfRangeError(EngineError):
    pass


class SelfLoopError(EngineError):
    pass


class UnknownObjectError(EngineError):
    pass


class NonComposableError(EngineError):
    pass


class InvalidPathError(EngineError):
    pass


class UnknownGeneratorError(EngineError):
    pass


class StepLimitError(EngineError):
    pass


class MetaphorNotExcitedError(EngineError):
    pass


class TooLargeError(EngineError):
    pass


class TokenMissingError(EngineError):
    pass


class DegenerateVectorError(EngineError):
    pass


class ParseError(EngineError):
    """Malformed input document.  ``location`` is a line or field path."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class UnknownLabelError(ParseError):
    pass


class DimensionMismatchError(ParseError):
    pass


class DuplicateTokenError(ParseError):
    pass
