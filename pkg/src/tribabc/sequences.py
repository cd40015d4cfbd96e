"""The position sequences A, B, C of the tribonacci word and their identities.

A, B and C list the positions of the symbols 1, 0 and 2 in t (offset 0).
Direct values come from scanning the word; the ``*_closed`` helpers and
the composition formulas evaluate the known closed forms, which only need
letter counts of t.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .word import (
    SCAN_LIMIT,
    Letter,
    RankProfile,
    _PREFIX,
    check_width,
    letter_fast,
    rank_fast,
    select,
    t_at,
    word_array,
)

__all__ = [
    "Letter",
    "Classification",
    "seq",
    "seq_closed",
    "seq_b_typed",
    "rank_closed",
    "classify",
    "compose",
    "compose_direct",
    "z_of_seq",
    "rank_of_seq",
    "abc_identity_gap",
    "legacy_abc",
]

A, B, C = Letter.A, Letter.B, Letter.C


class Classification(NamedTuple):
    letter: Letter
    index: int


def seq(x, n: int) -> int:
    """n-th position (offset 0) at which t carries the symbol of ``x``."""
    x = Letter.parse(x)
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    if 7 * n + 8 <= SCAN_LIMIT:
        return int(_PREFIX.positions(int(x), n + 1)[n])
    return check_width(select(x, n))


def seq_closed(x, n: int) -> int:
    """Closed forms in terms of the letter counts of t(0..n-1)."""
    x = Letter.parse(x)
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    r = rank_fast(n - 1)
    if x is A:
        value = 4 * n + 1 - r.weighted
    elif x is B:
        value = 2 * n - r.count_c
    else:
        value = 7 * n + 3 - (r.count_a + 3 * r.count_c)
    return check_width(value)


def seq_b_typed(kind: int, n: int) -> int:
    """n-th position k with t(k) = 0 and t(k+1) = ``kind``."""
    if kind not in (0, 1, 2):
        raise ValueError("B-type must be 0, 1 or 2")
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    hits = _B_TYPED.get(kind)
    length = 16 * n + 16
    while hits is None or len(hits) <= n:
        sym = word_array(length)
        hits = np.flatnonzero((sym[:-1] == 0) & (sym[1:] == kind))
        length *= 2
    _B_TYPED[kind] = hits
    return int(hits[n])


_B_TYPED: dict[int, np.ndarray] = {}


def rank_closed(n: int) -> RankProfile:
    """Letter counts of t(0..n) from A(n+1) and B(n+1)."""
    if n < -1:
        raise ValueError("rank position must be >= -1")
    a1, b1 = seq(A, n + 1), seq(B, n + 1)
    return RankProfile(
        n,
        count_a=2 * b1 - a1 + 1,
        count_b=a1 - b1 - (n + 2),
        count_c=2 * (n + 1) - b1,
    )


def classify(n: int) -> Classification:
    """Write n = X(k): X from the symbol t(n), k from the count of that symbol."""
    if n < 0:
        raise ValueError("classify requires n >= 0")
    if n < SCAN_LIMIT:
        letter = Letter(t_at(n))
        _, counts = _PREFIX.arrays(n + 1)
        return Classification(letter, int(counts[n, int(letter)]) - 1)
    letter = Letter(letter_fast(n))
    return Classification(letter, rank_fast(n).count(letter) - 1)


# (X, Y) -> (coefficients of A(k), B(k), k, constant) for X(Y(k) + 1),
# and the drop from X(Y(k) + 1) to X(Y(k)).
_COMPOSE = {
    (A, A): ((2, 2, 1, 6), 3),
    (A, B): ((1, 1, 1, 4), 4),
    (A, C): ((4, 3, 2, 10), 2),
    (B, A): ((1, 1, 1, 3), 2),
    (B, B): ((1, 0, 0, 1), 2),
    (B, C): ((2, 2, 1, 5), 1),
    (C, A): ((4, 3, 2, 12), 6),
    (C, B): ((2, 2, 1, 8), 7),
    (C, C): ((7, 6, 4, 20), 4),
}


def compose(x, y, k: int, shifted: bool = True) -> int:
    """Closed form of X(Y(k) + 1) (``shifted``) or X(Y(k))."""
    x, y = Letter.parse(x), Letter.parse(y)
    if k < 0:
        raise ValueError("k must be nonnegative")
    (ca, cb, ck, c0), drop = _COMPOSE[x, y]
    value = ca * seq(A, k) + cb * seq(B, k) + ck * k + c0
    if not shifted:
        value -= drop
    return check_width(value)


def compose_direct(x, y, k: int, shifted: bool = True) -> int:
    """Nested evaluation X(Y(k) + 1) or X(Y(k))."""
    inner = seq(y, k) + (1 if shifted else 0)
    return seq(x, inner)


def z_of_seq(x, k: int) -> int:
    """Closed form of z(X(k)), the symbol sum of t up to position X(k)."""
    x = Letter.parse(x)
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = seq(A, k), seq(B, k)
    if x is A:
        return 2 * (a - b) - k - 1
    if x is B:
        return -a + 3 * b - k + 1
    return b + 2 * k + 3


def rank_of_seq(x, y, k: int) -> int:
    """Closed form of z_X(Y(k)), the number of X-positions up to Y(k)."""
    x, y = Letter.parse(x), Letter.parse(y)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if x is y:
        return k + 1
    a, b = seq(A, k), seq(B, k)
    mixed = a - b - (k + 1)
    table = {
        (A, B): mixed,
        (A, C): b + 1,
        (B, A): b + 1,
        (B, C): a + 1,
        (C, A): mixed,
        (C, B): 2 * b - a + 1,
    }
    return table[x, y]


def abc_identity_gap(n: int) -> int:
    """C(n) - (A(n) + B(n)) - (n + 2); zero for every n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return seq(C, n) - seq(A, n) - seq(B, n) - n - 2


def legacy_abc(which: str, n: int) -> int:
    """The 1-offset sequences a, b, c (positions of 0, 1, 2 in t, counted from 1)."""
    if n < 1:
        raise ValueError("legacy sequences start at n = 1")
    letter = {"a": B, "b": A, "c": C}.get(which.lower())
    if letter is None:
        raise ValueError(f"unknown legacy sequence {which!r}")
    return seq(letter, n - 1) + 1
