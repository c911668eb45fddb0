"""Exception hierarchy.

Every error raised by the library derives from :class:`WidthError` and carries
a stable ``code`` string, which the CLI prints and tests match against.
"""

from __future__ import annotations


class WidthError(ValueError):
    code = "ERROR"


class InvalidCharacter(WidthError):
    code = "INVALID_CHARACTER"

    def __init__(self, index: int, char: str):
        self.index = index
        self.char = char
        super().__init__(f"invalid character {char!r} at index {index}")


class NotBalanced(WidthError):
    code = "NOT_BALANCED"


class BadLetter(WidthError):
    code = "BAD_LETTER"


class BadPosition(WidthError):
    code = "BAD_POSITION"


class NotNonnegative(WidthError):
    code = "NOT_NONNEGATIVE"


class ExcludedSwap(WidthError):
    code = "EXCLUDED_SWAP"


class BadWinding(WidthError):
    code = "BAD_WINDING"


class WidthOverflow(WidthError, OverflowError):
    code = "OVERFLOW"


class ParseError(WidthError):
    code = "PARSE_ERROR"


class NonAdjacentEdge(WidthError):
    code = "NON_ADJACENT_EDGE"

    def __init__(self, u: str, v: str, message: str | None = None):
        self.pair = (u, v)
        super().__init__(message or f"edge {u}-{v} does not join adjacent slabs")


class DuplicateId(WidthError):
    code = "DUPLICATE_ID"


class Disconnected(WidthError):
    code = "DISCONNECTED"


class NoLoop(WidthError):
    code = "NO_LOOP"


class MultipleLoops(WidthError):
    code = "MULTIPLE_LOOPS"


class NotACycle(WidthError):
    code = "NOT_A_CYCLE"


class LimitExceeded(WidthError):
    code = "LIMIT_EXCEEDED"


class UnknownSuite(WidthError):
    code = "UNKNOWN_SUITE"
