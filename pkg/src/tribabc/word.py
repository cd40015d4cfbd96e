"""Tribonacci numbers, the tribonacci word and rank/select over it.

The infinite word ``t = 0102010010201...`` is the fixed point of the
morphism ``0 -> 01, 1 -> 02, 2 -> 0``.  Finite words are plain ``str``
objects over ``"012"``; streams yield ``int`` symbols.

Two independent routes to letter counts are provided:

* :func:`rank` counts directly over a materialized prefix (the oracle);
* :func:`rank_fast` splits the prefix into blocks ``tw(l)`` and adds up
  their known letter counts, in time logarithmic in the position.
"""

from __future__ import annotations

import threading
from bisect import bisect_right
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator

import numpy as np

from .errors import NotInImageError

__all__ = [
    "MAX_VALUE",
    "Letter",
    "RankProfile",
    "check_width",
    "tribonacci",
    "morphism_apply",
    "morphism_inverse",
    "tribo_word",
    "t_at",
    "letter_fast",
    "word_stream",
    "word_prefix",
    "word_array",
    "prefix_counts",
    "char_value",
    "rank",
    "rank_fast",
    "block_counts",
    "select",
    "partition_stream",
    "PARTITION_BLOCKS",
]

#: Largest value any operation may produce (unsigned 64-bit).
MAX_VALUE = (1 << 64) - 1

# Positions below this are answered from the materialized prefix.
SCAN_LIMIT = 1 << 22


def check_width(value: int, what: str = "value") -> int:
    if value > MAX_VALUE:
        raise OverflowError(f"{what} {value} exceeds the 64-bit limit")
    return value


class Letter(IntEnum):
    """Sequence names keyed by the symbol of ``t`` they record."""

    B = 0
    A = 1
    C = 2

    @classmethod
    def parse(cls, x) -> "Letter":
        """Accept a ``Letter``, its name (``"A"``) or its symbol (``1``/``"1"``)."""
        if isinstance(x, cls):
            return x
        if isinstance(x, str):
            s = x.strip().upper()
            if s in cls.__members__:
                return cls[s]
            if s in ("0", "1", "2"):
                return cls(int(s))
            raise ValueError(f"unknown letter class {x!r}")
        return cls(int(x))


def _build_tribonacci_table() -> list[int]:
    table = [0, 0, 1]
    while True:
        nxt = table[-1] + table[-2] + table[-3]
        if nxt > MAX_VALUE:
            return table
        table.append(nxt)


_T = _build_tribonacci_table()
_T_MAX_INDEX = len(_T) - 1


def tribonacci(l: int) -> int:
    """Return T(l) with T(0) = T(1) = 0, T(2) = 1.

    Raises ``OverflowError`` once T(l) no longer fits in 64 bits.
    """
    if l < 0:
        raise ValueError("tribonacci index must be nonnegative")
    if l > _T_MAX_INDEX:
        raise OverflowError(f"T({l}) exceeds the 64-bit limit (max index {_T_MAX_INDEX})")
    return _T[l]


def block_counts(l: int) -> tuple[int, int, int]:
    """Letter counts ``(zeros, ones, twos)`` of ``tw(l)`` for ``l >= 1``.

    These are T(l+1), T(l), T(l-1); the test suite checks them against a
    direct count.
    """
    if l < 1:
        raise ValueError("block index must be >= 1")
    return tribonacci(l + 1), tribonacci(l), tribonacci(l - 1)


# ---------------------------------------------------------------------------
# morphism

_SIGMA = str.maketrans({"0": "01", "1": "02", "2": "0"})
_SYMBOLS = frozenset("012")


def _check_symbols(w: str) -> None:
    bad = set(w) - _SYMBOLS
    if bad:
        raise ValueError(f"word contains symbols outside 0/1/2: {sorted(bad)}")


def morphism_apply(w: str) -> str:
    """Apply ``0 -> 01, 1 -> 02, 2 -> 0`` letterwise."""
    _check_symbols(w)
    return w.translate(_SIGMA)


def morphism_inverse(w: str) -> str:
    """Undo :func:`morphism_apply`; blocks ``01`` and ``02`` are taken first."""
    _check_symbols(w)
    out = []
    i, n = 0, len(w)
    while i < n:
        if w[i] != "0":
            raise NotInImageError(f"{w!r} is not a morphic image (block at {i} starts with {w[i]})")
        nxt = w[i + 1] if i + 1 < n else ""
        if nxt == "1":
            out.append("0")
            i += 2
        elif nxt == "2":
            out.append("1")
            i += 2
        else:
            out.append("2")
            i += 1
    return "".join(out)


def tribo_word(l: int) -> str:
    """Finite tribonacci word tw(l) of length T(l+2); tw(0) = "2"."""
    if l < 0:
        raise ValueError("tw(l) requires l >= 0")
    length = tribonacci(l + 2)
    if length > SCAN_LIMIT * 4:
        raise OverflowError(f"tw({l}) has length {length}, beyond the materialization cap")
    w = "2"
    for _ in range(l):
        w = w.translate(_SIGMA)
    return w


# ---------------------------------------------------------------------------
# lazily materialized prefix of t


class _Prefix:
    """Append-only cache of a prefix of t plus derived arrays.

    Readers only ever see fully built immutable snapshots; growth happens
    under a lock.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._text = "0102010"
        self._arrays: tuple[np.ndarray, np.ndarray] | None = None
        self._positions: dict[int, np.ndarray] = {}

    def text(self, length: int) -> str:
        s = self._text
        if len(s) >= length:
            return s
        with self._lock:
            s = self._text
            while len(s) < length:
                s = s.translate(_SIGMA)
            self._text = s
        return s

    def arrays(self, length: int) -> tuple[np.ndarray, np.ndarray]:
        """Symbols as uint8 plus cumulative counts (shape ``(len, 3)``)."""
        snap = self._arrays
        if snap is not None and len(snap[0]) >= length:
            return snap
        s = self.text(max(length, 2 * (0 if snap is None else len(snap[0]))))
        with self._lock:
            snap = self._arrays
            if snap is None or len(snap[0]) < len(s):
                sym = np.frombuffer(s.encode("ascii"), dtype=np.uint8) - ord("0")
                counts = np.empty((len(sym), 3), dtype=np.int32)
                for letter in range(3):
                    np.cumsum(sym == letter, out=counts[:, letter])
                snap = (sym, counts)
                self._arrays = snap
                self._positions = {}
        return snap

    def positions(self, letter: int, count: int) -> np.ndarray:
        """Sorted positions of ``letter``; at least ``count`` of them."""
        pos = self._positions.get(letter)
        if pos is not None and len(pos) >= count:
            return pos
        # letter densities are > 1/7, so 7 * count + 8 symbols suffice
        sym, _ = self.arrays(7 * count + 8)
        pos = np.flatnonzero(sym == letter)
        with self._lock:
            if self._arrays is not None and self._arrays[0] is sym:
                self._positions[letter] = pos
        return pos


_PREFIX = _Prefix()


def word_prefix(length: int) -> str:
    """First ``length`` symbols of t as a string."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    return _PREFIX.text(length)[:length]


def word_array(length: int) -> np.ndarray:
    """First ``length`` symbols of t as a uint8 array (read-only view)."""
    sym, _ = _PREFIX.arrays(length)
    return sym[:length]


def prefix_counts(length: int) -> np.ndarray:
    """Cumulative letter counts: row n holds the counts of 0, 1, 2 in t(0..n)."""
    _, counts = _PREFIX.arrays(length)
    return counts[:length]


def t_at(n: int) -> int:
    """n-th symbol of the tribonacci word."""
    if n < 0:
        raise ValueError("position must be nonnegative")
    if n < SCAN_LIMIT:
        return ord(_PREFIX.text(n + 1)[n]) - 48
    return letter_fast(n)


def word_stream() -> Iterator[int]:
    """Yield t(0), t(1), ... forever."""
    pos = 0
    want = 64
    while True:
        s = _PREFIX.text(want)
        for ch in s[pos:]:
            yield ord(ch) - 48
        pos = len(s)
        want = 2 * pos


def char_value(x, n: int) -> int:
    """Characteristic function k_X(n): 1 iff t(n) is the symbol of ``x``."""
    x = Letter.parse(x)
    t = t_at(n)
    if x is Letter.A:
        return t * (2 - t)
    if x is Letter.B:
        return (t - 1) * (t - 2) // 2
    return t * (t - 1) // 2


# ---------------------------------------------------------------------------
# rank / select


@dataclass(frozen=True)
class RankProfile:
    """Letter counts over t(0..position); position -1 means the empty prefix."""

    position: int
    count_a: int
    count_b: int
    count_c: int

    @property
    def weighted(self) -> int:
        """z(n), the sum of the symbols t(0..n)."""
        return self.count_a + 2 * self.count_c

    def count(self, x) -> int:
        x = Letter.parse(x)
        return (self.count_b, self.count_a, self.count_c)[x]


def rank(n: int) -> RankProfile:
    """Count letters of t(0..n) over the materialized prefix."""
    if n < -1:
        raise ValueError("rank position must be >= -1")
    if n == -1:
        return RankProfile(-1, 0, 0, 0)
    _, counts = _PREFIX.arrays(n + 1)
    zeros, ones, twos = (int(v) for v in counts[n])
    return RankProfile(n, ones, zeros, twos)


# _BLOCK_LEN[j] = |tw(j + 1)| = T(j + 3)
_BLOCK_LEN = _T[3:]


def _blocks(m: int) -> Iterator[int]:
    """Greedy split of a prefix of length ``m`` into words tw(l), largest first."""
    while m:
        j = bisect_right(_BLOCK_LEN, m) - 1
        yield j + 1
        m -= _BLOCK_LEN[j]


def rank_fast(n: int) -> RankProfile:
    """Same result as :func:`rank`, computed from tw-block letter counts.

    The prefix t(0..n) of length n + 1 is the concatenation of tw(l) over
    the greedy tribonacci decomposition of n + 1.
    """
    if n < -1:
        raise ValueError("rank position must be >= -1")
    check_width(n + 1, "prefix length")
    a = b = c = 0
    for l in _blocks(n + 1):
        b += _T[l + 1]
        a += _T[l]
        c += _T[l - 1]
    return RankProfile(n, a, b, c)


# last symbol of tw(l) for l % 3 == 0, 1, 2
_LAST_SYMBOL = (2, 0, 1)


def letter_fast(n: int) -> int:
    """t(n) from the last tw-block covering the prefix of length n + 1."""
    if n < 0:
        raise ValueError("position must be nonnegative")
    check_width(n + 1, "prefix length")
    smallest = 0
    for l in _blocks(n + 1):
        smallest = l
    return _LAST_SYMBOL[smallest % 3]


def select(x, k: int) -> int:
    """Position of the k-th (0-based) occurrence of ``x`` via binary search on rank_fast."""
    x = Letter.parse(x)
    if k < 0:
        raise ValueError("occurrence index must be nonnegative")
    lo, hi = k, 7 * k + 3
    check_width(hi + 1, "search bound")
    while lo < hi:
        mid = (lo + hi) // 2
        if rank_fast(mid).count(x) >= k + 1:
            hi = mid
        else:
            lo = mid + 1
    return lo


# ---------------------------------------------------------------------------
# self-similar partitions of t

PARTITION_BLOCKS: dict[int, tuple[str, str, str]] = {
    # blocks chosen by t(j) = 0, 1, 2
    1: ("0102010010201", "01020100102", "0102010"),
    2: ("0102010", "010201", "0102"),
    3: ("0102", "010", "01"),
    4: ("01", "02", "0"),
}


def partition_stream(variant: int) -> Iterator[int]:
    """Concatenate blocks chosen by the letters of t; yields the symbols of t again."""
    try:
        blocks = PARTITION_BLOCKS[variant]
    except KeyError:
        raise ValueError(f"partition variant must be 1..4, got {variant}") from None
    encoded = [[ord(ch) - 48 for ch in b] for b in blocks]
    for letter in word_stream():
        yield from encoded[letter]
