"""Exception types shared across the package."""

from __future__ import annotations

from typing import NamedTuple


class Violation(NamedTuple):
    """One structural defect found by a word validator."""

    kind: str
    index: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        where = "" if self.index is None else f" at {self.index}"
        extra = f": {self.detail}" if self.detail else ""
        return f"{self.kind}{where}{extra}"


class TriboError(Exception):
    pass


class ValidationError(TriboError, ValueError):
    def __init__(self, word, violations):
        self.word = word
        self.violations = list(violations)
        msg = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid word {word!r}: {msg}")


class NotInImageError(TriboError, ValueError):
    """Raised when a word cannot be written as an image of the morphism."""


class NoRepresentationError(TriboError, ValueError):
    pass


class BFileParseError(TriboError, ValueError):
    def __init__(self, line_no: int, line: str):
        self.line_no = line_no
        self.line = line
        super().__init__(f"malformed b-file line {line_no}: {line!r}")


class CoverageError(TriboError, ValueError):
    pass


class UnknownCheckError(TriboError, KeyError):
    pass
