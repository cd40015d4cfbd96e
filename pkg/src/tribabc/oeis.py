"""OEIS b-file parsing and comparison against the local generators.

A binding states ``local(n) = bfile(n + index_shift) + value_shift``.

Related OEIS entries without a binding here name constants,
Fibonacci/Wythoff or Beatty sequences, or the ABC representation over
the 1-offset a/b/c sequences: A000201, A001590, A001622, A001950,
A005614, A058265, A158919, A189921, A316711, A316712, A317206.
"""

from __future__ import annotations

import io
import os
import re
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .abc import abc_encode
from .errors import BFileParseError, CoverageError
from .report import CheckReport, ViolationLog
from .sequences import legacy_abc, seq, seq_b_typed
from .word import Letter, char_value, rank, t_at, tribonacci
from .zt import zt_encode, zt_length

__all__ = [
    "BFile",
    "SequenceBinding",
    "BINDINGS",
    "GENERATORS",
    "DATA_ENV",
    "data_dir",
    "parse_bfile",
    "load_bfile",
    "bundled_bfile",
    "compare",
]

DATA_ENV = "TRIBABC_DATA_DIR"


@dataclass
class BFile:
    entries: dict[int, int]
    seq_id: str | None = None

    @property
    def first(self) -> int:
        return min(self.entries)

    @property
    def last(self) -> int:
        return max(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


_ID_RE = re.compile(r"A\d{6}")


def parse_bfile(source, seq_id: str | None = None) -> BFile:
    """Parse ``index value`` lines; ``#`` comments and blank lines are skipped.

    ``source`` may be bytes, str, or a (binary or text) file object.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, (bytes, bytearray)):
        source = source.decode("ascii")
    entries: dict[int, int] = {}
    prev = None
    for line_no, raw in enumerate(io.StringIO(source, newline=None), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if seq_id is None:
                m = _ID_RE.search(line)
                if m:
                    seq_id = m.group(0)
            continue
        parts = line.split()
        try:
            if len(parts) != 2:
                raise ValueError
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(line_no, raw.rstrip("\r\n")) from None
        if prev is not None and index != prev + 1:
            raise BFileParseError(line_no, raw.rstrip("\r\n"))
        entries[index] = value
        prev = index
    return BFile(entries, seq_id)


def load_bfile(path) -> BFile:
    path = Path(path)
    m = re.fullmatch(r"b(\d{6})\.txt", path.name)
    with open(path, "rb") as f:
        return parse_bfile(f, f"A{m.group(1)}" if m else None)


def data_dir() -> Path:
    """Fixture directory: ``$TRIBABC_DATA_DIR`` or the bundled data."""
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path(__file__).with_name("data")


def bundled_bfile(seq_id: str, directory=None) -> BFile:
    directory = Path(directory) if directory is not None else data_dir()
    return load_bfile(directory / f"b{seq_id[1:]}.txt")


# ---------------------------------------------------------------------------
# generators

class _ABCDigits:
    """Digits of ABC(0), ABC(1), ... written one after another."""

    def __init__(self) -> None:
        self._digits: list[int] = []
        self._next = 0

    def __call__(self, i: int) -> int:
        while len(self._digits) <= i:
            self._digits.extend(int(c) for c in abc_encode(self._next))
            self._next += 1
        return self._digits[i]


def _z(n):
    return rank(n).weighted


GENERATORS: dict[str, Callable[[int], int]] = {
    "T": tribonacci,
    "t": t_at,
    "A": lambda n: seq(Letter.A, n),
    "B": lambda n: seq(Letter.B, n),
    "C": lambda n: seq(Letter.C, n),
    "B0": lambda n: seq_b_typed(0, n),
    "B1": lambda n: seq_b_typed(1, n),
    "B2": lambda n: seq_b_typed(2, n),
    "a": lambda n: legacy_abc("a", n),
    "b": lambda n: legacy_abc("b", n),
    "c": lambda n: legacy_abc("c", n),
    "z": _z,
    "zA": lambda n: rank(n).count_a,
    "zB": lambda n: rank(n).count_b,
    "zC": lambda n: rank(n).count_c,
    "kA": lambda n: char_value(Letter.A, n),
    "kB": lambda n: char_value(Letter.B, n),
    "kC": lambda n: char_value(Letter.C, n),
    "zt_value": lambda n: int(zt_encode(n)),
    "zt_length": zt_length,
    "abc_length": lambda n: len(abc_encode(n)),
    "abc_count_B": lambda n: abc_encode(n).count("0"),
    "abc_count_A": lambda n: abc_encode(n).count("1"),
    "abc_count_C": lambda n: abc_encode(n).count("2"),
    "abc_digits": _ABCDigits(),
    "abc_123": lambda n: int(abc_encode(n).translate(str.maketrans("012", "123"))),
}


@dataclass(frozen=True)
class SequenceBinding:
    oeis_id: str
    generator: str
    index_shift: int = 0
    value_shift: int = 0
    note: str = ""

    def local(self, n: int) -> int:
        return GENERATORS[self.generator](n)


def _b(oeis_id, generator, index_shift=0, value_shift=0, note=""):
    return SequenceBinding(oeis_id, generator, index_shift, value_shift, note)


BINDINGS: dict[str, SequenceBinding] = {
    b.oeis_id: b
    for b in [
        _b("A000073", "T"),
        _b("A080843", "t"),
        _b("A092782", "t", 1, -1, "same word on 1, 2, 3 with offset 1"),
        _b("A278040", "A"),
        _b("A278039", "B"),
        _b("A278041", "C"),
        _b("A003144", "a", note="a(n) = B(n-1) + 1"),
        _b("A003145", "b", note="b(n) = A(n-1) + 1"),
        _b("A003146", "c", note="c(n) = C(n-1) + 1"),
        _b("A278038", "zt_value", note="ZT(N) read as a decimal numeral"),
        _b("A278044", "zt_length"),
        _b("A319198", "z"),
        _b("A276797", "zA", 1),
        _b("A276796", "zB", 1),
        _b("A276798", "zC", 1, -1),
        _b("A276794", "kA", 1),
        _b("A276793", "kB", 1),
        _b("A276791", "kC", 1),
        _b("A319968", "B0", 1),
        _b("A316714", "abc_length"),
        _b("A316715", "abc_count_B"),
        _b("A316716", "abc_count_A"),
        _b("A316717", "abc_count_C"),
        _b("A319195", "abc_digits", note="rows ABC(0), ABC(1), ... flattened"),
        _b("A316713", "abc_123", note="ABC(N) on digits 1, 2, 3 read as a decimal numeral"),
    ]
}


def compare(binding: SequenceBinding, bfile: BFile, limit: int | None = None, cap: int = 10) -> CheckReport:
    """Compare ``limit`` b-file entries (from its first index) with the local generator."""
    start = time.perf_counter()
    first = bfile.first
    count = len(bfile) if limit is None else limit
    if count < 1:
        raise ValueError("limit must be >= 1")
    last = first + count - 1
    if last > bfile.last:
        raise CoverageError(
            f"{binding.oeis_id}: b-file covers [{first}, {bfile.last}], need [{first}, {last}]"
        )
    log = ViolationLog(cap)
    for i in range(first, last + 1):
        n = i - binding.index_shift
        try:
            local = binding.local(n)
        except (ValueError, KeyError) as exc:
            log.add(i, bfile.entries[i] + binding.value_shift, f"error: {exc}")
            continue
        log.check(i, bfile.entries[i] + binding.value_shift, local)
    return CheckReport(
        check_id=f"oeis:{binding.oeis_id}",
        range=(first, last),
        violations=log.items,
        violation_count=log.count,
        elapsed=time.perf_counter() - start,
    )
