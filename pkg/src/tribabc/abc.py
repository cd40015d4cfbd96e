"""ABC representation: N as nested applications of A, B, C to 0.

Words use ``0, 1, 2`` for ``B, A, C``.  The leftmost letter is applied
last, and every word ends in the single ``B`` standing for ``B(0) = 0``:
``"020"`` is ``B(C(B(0))) = 6``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import groupby

from .errors import ValidationError, Violation
from .sequences import classify, seq
from .word import Letter

__all__ = [
    "BlockForm",
    "abc_encode",
    "abc_encode_chain",
    "abc_decode",
    "abc_validate",
    "abc_blockform",
    "letters_to_abc",
    "abc_to_letters",
]

_NAMES = {"0": "B", "1": "A", "2": "C"}
_DIGITS = {v: k for k, v in _NAMES.items()}


def abc_to_letters(w: str) -> str:
    """``"10020"`` -> ``"ABBCB"``."""
    return "".join(_NAMES[ch] for ch in w)


def letters_to_abc(w: str) -> str:
    """``"ABBCB"`` -> ``"10020"``."""
    return "".join(_DIGITS[ch] for ch in w.upper())


def abc_encode_chain(N: int) -> list[tuple[Letter, int]]:
    """Classification chain ``[(X_0, k_0), (X_1, k_1), ..., (B, 0)]``."""
    if N < 0:
        raise ValueError("ABC representation needs N >= 0")
    chain = []
    n = N
    while True:
        letter, k = classify(n)
        chain.append((letter, k))
        if n == 0:
            return chain
        n = k


def abc_encode(N: int) -> str:
    return "".join(str(int(letter)) for letter, _ in abc_encode_chain(N))


def abc_validate(w: str) -> list[Violation]:
    if not w:
        return [Violation("empty")]
    out = [Violation("non-ternary", i, repr(ch)) for i, ch in enumerate(w) if ch not in "012"]
    if w[-1] != "0":
        out.append(Violation("bad-terminal", len(w) - 1, "last letter must be 0 (B)"))
    elif len(w) > 1 and w[-2] == "0":
        out.append(Violation("double-B-at-end", len(w) - 2, "final B-block must have exponent 1"))
    return out


def _require_valid(w: str) -> None:
    problems = abc_validate(w)
    if problems:
        raise ValidationError(w, problems)


def abc_decode(w: str) -> int:
    _require_valid(w)
    value = 0
    for ch in reversed(w[:-1]):
        value = seq(int(ch), value)
    return value


@dataclass(frozen=True)
class BlockForm:
    """Run-length form of an ABC word, without the terminal ``B(0)``."""

    blocks: tuple[tuple[Letter, int], ...]
    counts: dict[Letter, int]

    @property
    def J(self) -> int:
        return len(self.blocks)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.blocks)

    @property
    def length(self) -> int:
        """Number of sequence letters including the terminal B."""
        return sum(self.exponents) + 1


def abc_blockform(w: str) -> BlockForm:
    _require_valid(w)
    blocks = tuple((Letter(int(ch)), len(list(run))) for ch, run in groupby(w[:-1]))
    tally = Counter(Letter(int(ch)) for ch in w)
    return BlockForm(blocks, {x: tally.get(x, 0) for x in (Letter.B, Letter.A, Letter.C)})
