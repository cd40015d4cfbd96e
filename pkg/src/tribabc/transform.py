"""String transforms between ZT words and ABC words.

Nothing here evaluates a number.  The route is

    ZT  ->  hat word  ->  ABDX word  ->  ABC
    ZT  <-  hat word  <-  ABDX word  <-  ABC

where the hat word is ``0 + reversed(ZT) + 0`` and the ABDX word is over
``A``, ``B``, ``.`` (dot) and ``x`` (cross).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .errors import ValidationError, Violation

__all__ = [
    "TRIBONS",
    "DOUBLETS",
    "TERMINAL_TRIBONS",
    "TERMINAL_DOUBLETS",
    "TribonCensus",
    "zt_to_hat",
    "hat_validate",
    "hat_to_abdx",
    "abdx_validate",
    "abdx_to_abc",
    "abc_to_abdx",
    "abdx_to_hat",
    "hat_to_zt",
    "convert",
    "convert_back",
    "convert_stages",
    "tribon_census",
]

DOT, CROSS = ".", "x"

#: The 20 length-3 factors that occur in ABDX words.
TRIBONS = frozenset(
    ["A.A", "A.B", "A.x"]
    + ["BBB", "BBA", "BAB", "BA.", "BBx", "Bxx"]
    + [".A.", ".AB", ".BA", ".BB", ".Bx", ".xx"]
    + ["x.A", "x.B", "x.x", "xx.", "xxB"]
)
#: Factors that may only close a word.
TERMINAL_TRIBONS = frozenset(["BAB", ".AB", "xxB"])

#: The 11 length-2 factors that occur in ABDX words.
DOUBLETS = frozenset(["A.", "AB", "BB", "BA", "Bx", ".A", ".B", ".x", "x.", "xx", "xB"])
TERMINAL_DOUBLETS = frozenset(["AB", "xB"])


def _zt_problems(w: str) -> list[Violation]:
    if not w:
        return [Violation("empty")]
    out = [Violation("non-binary", i, repr(ch)) for i, ch in enumerate(w) if ch not in "01"]
    if w[0] != "1":
        out.append(Violation("leading-zero", 0))
    if "111" in w:
        out.append(Violation("triple-ones", w.index("111")))
    return out


def zt_to_hat(w: str) -> str:
    problems = _zt_problems(w)
    if problems:
        raise ValidationError(w, problems)
    return "0" + w[::-1] + "0"


def hat_validate(w: str) -> list[Violation]:
    if len(w) < 3:
        return [Violation("too-short", None, "hat words have length >= 3")]
    out = [Violation("non-binary", i, repr(ch)) for i, ch in enumerate(w) if ch not in "01"]
    if w[0] != "0":
        out.append(Violation("bad-start", 0, "must begin with 0"))
    if not w.endswith("10"):
        out.append(Violation("bad-end", len(w) - 2, "must end with 10"))
    if "111" in w:
        out.append(Violation("triple-ones", w.index("111")))
    return out


def _substitute(w: str, i: int) -> str:
    """Rewrite position i of a hat word by the rule matching its right context."""
    ch, nxt = w[i], w[i + 1]
    if ch == "0":
        if nxt == "0":
            return "B"
        if w[i + 1 : i + 3] == "11":
            return CROSS
        if w[i + 1 : i + 3] == "10":
            return "A"
    else:
        if nxt == "1":
            return CROSS
        return DOT if i + 2 < len(w) else "B"
    raise ValidationError(w, [Violation("no-rule", i, f"context {w[i:i + 3]!r}")])


def hat_to_abdx(w: str) -> str:
    """Apply the six context rules to every position but the last."""
    problems = hat_validate(w)
    if problems:
        raise ValidationError(w, problems)
    return "".join(_substitute(w, i) for i in range(len(w) - 1))


def abdx_validate(w: str) -> list[Violation]:
    if len(w) < 2:
        return [Violation("too-short", None, "ABDX words have length >= 2")]
    out = [Violation("bad-symbol", i, repr(ch)) for i, ch in enumerate(w) if ch not in "AB.x"]
    if out:
        return out
    last = len(w) - 1
    if w[last] != "B" or w[last - 1] not in ("A", CROSS):
        out.append(Violation("bad-terminal", last, "must end in AB or xxB"))
    for i, ch in enumerate(w):
        if ch == DOT:
            if i + 1 <= last and w[i + 1] == DOT:
                out.append(Violation("double-dot", i))
            if not (w[i - 1 : i] == "A" or (i >= 2 and w[i - 2 : i] == "xx")):
                out.append(Violation("orphan-dot", i, "dot must follow A or xx"))
        elif ch == CROSS:
            start = i
            while start > 0 and w[start - 1] == CROSS:
                start -= 1
            end = i
            while end < last and w[end + 1] == CROSS:
                end += 1
            follower = w[end + 1] if end < last else ""
            ok = end - start == 1 and (follower == DOT or (follower == "B" and end + 1 == last))
            if not ok and i == start:
                out.append(Violation("bad-cross", i, "crosses must form xx. or a final xxB"))
        elif ch == "A":
            if not (i + 1 <= last and (w[i + 1] == DOT or (w[i + 1] == "B" and i + 1 == last))):
                out.append(Violation("bad-A", i, "A must be followed by a dot or the final B"))
    return out


def _require_abdx(w: str) -> None:
    problems = abdx_validate(w)
    if problems:
        raise ValidationError(w, problems)


def abdx_to_abc(w: str) -> str:
    """``A.`` -> A, ``xx.`` -> C, ``B`` -> B; the final ``AB``/``xxB`` keep their B(0)."""
    _require_abdx(w)
    out = []
    i = 0
    while i < len(w):
        ch = w[i]
        if ch == "B":
            out.append("0")
            i += 1
        elif ch == "A":
            out.append("1")
            i += 2 if w[i + 1] == DOT else 1
        else:
            out.append("2")
            i += 3 if i + 2 < len(w) and w[i + 2] == DOT else 2
    return "".join(out)


def _abc_problems(w: str) -> list[Violation]:
    if not w:
        return [Violation("empty")]
    out = [Violation("non-ternary", i, repr(ch)) for i, ch in enumerate(w) if ch not in "012"]
    if w[-1] != "0":
        out.append(Violation("bad-terminal", len(w) - 1))
    elif len(w) > 1 and w[-2] == "0":
        out.append(Violation("double-B-at-end", len(w) - 2))
    return out


def abc_to_abdx(w: str) -> str:
    """Inverse of :func:`abdx_to_abc`; the word ``"0"`` (N = 0) has no image."""
    problems = _abc_problems(w)
    if not problems and len(w) < 2:
        problems = [Violation("zero", 0, "N = 0 has no ABDX form")]
    if problems:
        raise ValidationError(w, problems)
    body = w[:-1]
    out = []
    for i, ch in enumerate(body):
        final = i == len(body) - 1
        if ch == "0":
            out.append("B")
        elif ch == "1":
            out.append("A" if final else "A.")
        else:
            out.append("xx" if final else "xx.")
    out.append("B")
    return "".join(out)


_V1_BLOCKS = {"A.": "01", "xx.": "011", "B": "0"}


def abdx_to_hat(w: str, version: int = 2) -> str:
    """Undo the substitution rules.

    Version 1 replaces blocks (``A.`` -> 01, ``xx.`` -> 011, ``B`` -> 0,
    final ``AB`` -> 010, final ``xxB`` -> 0110).  Version 2 prepends a 0
    and maps ``A``, ``x`` to 1 and ``B``, ``.`` to 0.
    """
    _require_abdx(w)
    if version == 2:
        return "0" + w.translate(str.maketrans("Ax.B", "1100"))
    if version != 1:
        raise ValueError("version must be 1 or 2")
    if w.endswith("xxB"):
        body, tail = w[:-3], "0110"
    else:
        body, tail = w[:-2], "010"
    out = []
    i = 0
    while i < len(body):
        for block, digits in _V1_BLOCKS.items():
            if body.startswith(block, i):
                out.append(digits)
                i += len(block)
                break
        else:  # pragma: no cover - excluded by validation
            raise ValidationError(w, [Violation("no-block", i)])
    out.append(tail)
    return "".join(out)


def hat_to_zt(w: str) -> str:
    problems = hat_validate(w)
    if problems:
        raise ValidationError(w, problems)
    zt = w[-2:0:-1]
    problems = _zt_problems(zt)
    if problems:
        raise ValidationError(zt, problems)
    return zt


def convert(w: str) -> str:
    """ZT word -> ABC word."""
    return abdx_to_abc(hat_to_abdx(zt_to_hat(w)))


def convert_back(w: str, version: int = 2) -> str:
    """ABC word -> ZT word."""
    return hat_to_zt(abdx_to_hat(abc_to_abdx(w), version))


def convert_stages(w: str, source: str = "zt") -> dict[str, str]:
    """All intermediate words, keyed ``zt``, ``hat``, ``abdx``, ``abc``."""
    if source == "zt":
        hat = zt_to_hat(w)
        abdx = hat_to_abdx(hat)
        return {"zt": w, "hat": hat, "abdx": abdx, "abc": abdx_to_abc(abdx)}
    if source == "abc":
        abdx = abc_to_abdx(w)
        hat = abdx_to_hat(abdx)
        return {"abc": w, "abdx": abdx, "hat": hat, "zt": hat_to_zt(hat)}
    raise ValueError("source must be 'zt' or 'abc'")


@dataclass
class TribonCensus:
    tribons: Counter = field(default_factory=Counter)
    doublets: Counter = field(default_factory=Counter)
    # tribon -> hat-word windows (three rewritten digits plus two of context)
    contexts: dict = field(default_factory=lambda: defaultdict(set))
    # factors seen somewhere other than at the end of a word
    nonterminal: set = field(default_factory=set)


def tribon_census(max_n: int) -> TribonCensus:
    """Tally the length-2 and length-3 factors of the ABDX words of 1..max_n."""
    from .zt import zt_encode

    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    census = TribonCensus()
    for n in range(1, max_n + 1):
        hat = zt_to_hat(zt_encode(n))
        w = hat_to_abdx(hat)
        padded = hat + "|"
        for size, tally in ((2, census.doublets), (3, census.tribons)):
            for i in range(len(w) - size + 1):
                f = w[i : i + size]
                tally[f] += 1
                if i + size < len(w):
                    census.nonterminal.add(f)
                if size == 3:
                    census.contexts[f].add(padded[i : i + 5])
    return census
