"""Tribonacci (Zeckendorf-like) representation of positive integers.

``ZT(N)`` is the binary word, most significant digit first, with digit i
weighing T(i + 3) = 1, 2, 4, 7, 13, ... and no three consecutive ones.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import NoRepresentationError, ValidationError, Violation
from .word import _T, check_width

__all__ = [
    "GreedyTrace",
    "greedy_trace",
    "zt_encode",
    "zt_decode",
    "zt_validate",
    "zt_length",
    "tribonacci_floor",
]

# digit weights T(3), T(4), ...; strictly increasing
_WEIGHTS = _T[3:]


def tribonacci_floor(n: int) -> tuple[int, int]:
    """Largest weight T(i + 3) <= n, returned as ``(value, i)``."""
    if n < 1:
        raise ValueError("floor needs n >= 1")
    check_width(n)
    i = bisect_right(_WEIGHTS, n) - 1
    return _WEIGHTS[i], i


@dataclass(frozen=True)
class GreedyTrace:
    remainders: tuple[int, ...]
    floors: tuple[int, ...]
    indices: tuple[int, ...]

    @property
    def word(self) -> str:
        top = self.indices[0]
        on = set(self.indices)
        return "".join("1" if i in on else "0" for i in range(top, -1, -1))


def greedy_trace(N: int) -> GreedyTrace:
    """Subtract the largest fitting weight until nothing is left."""
    if N < 1:
        raise NoRepresentationError(f"ZT is defined for N >= 1, got {N}")
    remainders = [N]
    floors, indices = [], []
    n = N
    while n:
        value, i = tribonacci_floor(n)
        floors.append(value)
        indices.append(i)
        n -= value
        remainders.append(n)
    return GreedyTrace(tuple(remainders), tuple(floors), tuple(indices))


def zt_encode(N: int) -> str:
    return greedy_trace(N).word


def zt_validate(w: str) -> list[Violation]:
    """Return the violations of ``w``; an empty list means the word is valid."""
    if not w:
        return [Violation("empty")]
    out = []
    for i, ch in enumerate(w):
        if ch not in "01":
            out.append(Violation("non-binary", i, repr(ch)))
    if w[0] == "0":
        out.append(Violation("leading-zero", 0))
    pos = w.find("111")
    while pos >= 0:
        out.append(Violation("triple-ones", pos))
        pos = w.find("111", pos + 1)
    return out


def zt_decode(w: str) -> int:
    problems = zt_validate(w)
    if problems:
        raise ValidationError(w, problems)
    if len(w) > len(_WEIGHTS):
        raise OverflowError(f"ZT word of length {len(w)} exceeds the 64-bit limit")
    total = sum(_WEIGHTS[i] for i, ch in enumerate(reversed(w)) if ch == "1")
    return check_width(total)


def zt_length(N: int) -> int:
    """Number of digits of ZT(N)."""
    if N < 1:
        raise NoRepresentationError(f"ZT is defined for N >= 1, got {N}")
    return tribonacci_floor(N)[1] + 1
