"""Batch verification of every identity, partition, census and round trip.

Each registered check takes an index bound ``limit`` and records
mismatches as ``(input, expected, actual)``.  Expected values come from
direct scans of the materialized word whenever the check is about a
closed form.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import islice, product
from typing import Callable, Iterable

import numpy as np

from . import abc as abc_codec
from . import transform, zt
from .errors import UnknownCheckError
from .report import CheckReport, ViolationLog, reports_to_json, reports_to_text
from .sequences import (
    abc_identity_gap,
    classify,
    compose,
    compose_direct,
    rank_closed,
    rank_of_seq,
    seq,
    seq_b_typed,
    seq_closed,
    z_of_seq,
)
from .word import (
    Letter,
    block_counts,
    char_value,
    letter_fast,
    morphism_apply,
    morphism_inverse,
    partition_stream,
    prefix_counts,
    rank,
    rank_fast,
    select,
    t_at,
    tribo_word,
    tribonacci,
    word_array,
    word_prefix,
    word_stream,
)

__all__ = ["CHECKS", "run_checks", "reports_to_text", "reports_to_json"]

A, B, C = Letter.A, Letter.B, Letter.C
LETTERS = (A, B, C)

CheckFn = Callable[[int, ViolationLog], tuple[int, int]]
CHECKS: dict[str, tuple[CheckFn, str]] = {}


def check(name: str, description: str):
    def register(fn: CheckFn) -> CheckFn:
        CHECKS[name] = (fn, description)
        return fn

    return register


class _Oracle:
    """Positions and counts taken straight from the scanned word."""

    def __init__(self, length: int):
        self.sym = word_array(length).astype(np.int64)
        counts = prefix_counts(length)
        # column order in prefix_counts is symbol 0, 1, 2
        self.zB, self.zA, self.zC = (counts[:, i].astype(np.int64) for i in range(3))
        self.z = np.cumsum(self.sym)
        self.pos = {x: np.flatnonzero(self.sym == int(x)) for x in LETTERS}

    def at(self, arr: np.ndarray, n: int) -> int:
        """Prefix-count lookup with the empty-prefix convention at -1."""
        return 0 if n < 0 else int(arr[n])

    def count(self, x: Letter, n: int) -> int:
        return self.at({A: self.zA, B: self.zB, C: self.zC}[x], n)


def _oracle_for(max_index: int) -> _Oracle:
    # C is the sparsest sequence: C(n) <= 7n + 3
    return _Oracle(7 * max_index + 64)


# ---------------------------------------------------------------------------
# the word and its rank structure


@check("prefix", "tw(l) agrees with t on its whole length")
def _prefix(limit, log):
    l = 1
    while tribonacci(l + 2) <= max(limit, 1):
        w = tribo_word(l)
        log.check(l, word_prefix(len(w)), w)
        l += 1
    return 1, l - 1


@check("recursion", "tw(l) = tw(l-1) tw(l-2) tw(l-3)")
def _recursion(limit, log):
    l = 3
    while tribonacci(l + 2) <= max(limit, 4):
        log.check(l, tribo_word(l - 1) + tribo_word(l - 2) + tribo_word(l - 3), tribo_word(l))
        log.check(("sigma", l), tribo_word(l), morphism_apply(tribo_word(l - 1)))
        l += 1
    return 3, l - 1


@check("morphism", "sigma maps prefixes of t to prefixes of t and inverts")
def _morphism(limit, log):
    sizes = sorted({m for m in range(1, min(limit, 300) + 1)} | {limit})
    for m in sizes:
        p = word_prefix(m)
        img = morphism_apply(p)
        log.check(m, word_prefix(len(img)), img)
        log.check(("inverse", m), p, morphism_inverse(img))
    return 1, limit


@check("block_counts", "letter counts of tw(l) are T(l+1), T(l), T(l-1)")
def _block_counts(limit, log):
    top = 20
    while tribonacci(top + 3) <= limit:
        top += 1
    for l in range(1, top + 1):
        w = tribo_word(l)
        log.check(l, (w.count("0"), w.count("1"), w.count("2")), block_counts(l))
    return 1, top


@check("rank_fast", "rank_fast(n) = rank(n)")
def _rank_fast(limit, log):
    for n in range(-1, limit + 1):
        log.check(n, rank(n), rank_fast(n))
    return -1, limit


@check("letter_fast", "symbol from the block decomposition equals the scanned symbol")
def _letter_fast(limit, log):
    sym = word_array(limit + 1)
    for n in range(limit + 1):
        log.check(n, int(sym[n]), letter_fast(n))
    return 0, limit


@check("select", "select(letter, rank - 1) returns the position (1000 seeded samples)")
def _select(limit, log):
    rng = random.Random(20181016)
    hi = max(limit, 1)
    for n in sorted(rng.randrange(0, hi + 1) for _ in range(1000)):
        x = Letter(t_at(n))
        log.check(n, n, select(x, rank_fast(n).count(x) - 1))
    return 0, hi


@check("lemma9", "each block partition of t reproduces t")
def _lemma9(limit, log):
    ref = list(islice(word_stream(), limit))
    for variant in (1, 2, 3, 4):
        got = list(islice(partition_stream(variant), limit))
        if got != ref:
            first = next(i for i, (a, b) in enumerate(zip(ref, got)) if a != b)
            log.add((variant, first), ref[first], got[first])
    return 0, limit - 1


@check("char_partition", "exactly one characteristic value is 1; profile invariants")
def _char_partition(limit, log):
    sym = word_array(limit + 1)
    z = 0
    for n in range(limit + 1):
        ks = tuple(char_value(x, n) for x in (A, B, C))
        log.check(("k", n), 1, sum(ks))
        t = int(sym[n])
        log.check(("kX", n), (int(t == 1), int(t == 0), int(t == 2)), ks)
        r = rank(n)
        z += t
        log.check(("sum", n), n + 1, r.count_a + r.count_b + r.count_c)
        log.check(("z", n), z, r.weighted)
    return 0, limit


# ---------------------------------------------------------------------------
# the sequences A, B, C


@check("complementarity", "A, B, C partition the integers; classify round-trips")
def _complementarity(limit, log):
    o = _oracle_for(limit)
    hits = np.zeros(limit + 1, dtype=np.int64)
    for x in LETTERS:
        p = o.pos[x]
        hits[p[p <= limit]] += 1
    for n in np.flatnonzero(hits != 1):
        log.add(("cover", int(n)), 1, int(hits[n]))
    for n in range(limit + 1):
        letter, k = classify(n)
        log.check(n, n, seq(letter, k))
        log.check(("letter", n), int(o.sym[n]), int(letter))
    return 0, limit


@check("closed_forms", "seq_closed(x, n) = seq(x, n) = scanned position")
def _closed_forms(limit, log):
    o = _oracle_for(limit)
    for x in LETTERS:
        for n in range(limit + 1):
            direct = int(o.pos[x][n])
            log.check((x.name, n), direct, seq(x, n))
            log.check((x.name, "closed", n), direct, seq_closed(x, n))
    return 0, limit


@check("prop10", "A(n) = 4n + 1 - z(n-1)")
def _prop10(limit, log):
    o = _oracle_for(limit)
    for n in range(limit + 1):
        expected = int(o.pos[A][n])
        log.check(n, expected, 4 * n + 1 - o.at(o.z, n - 1))
        log.check(("lib", n), expected, seq_closed(A, n))
    return 0, limit


@check("prop11", "B0, B1, B2, B and C closed forms")
def _prop11(limit, log):
    # B0(n) = 2 C(n) - n <= 13n + 6
    o = _Oracle(14 * limit + 64)
    s = o.sym
    b_typed = {k: np.flatnonzero((s[:-1] == 0) & (s[1:] == k)) for k in (0, 1, 2)}
    for n in range(limit + 1):
        za, zc, z = o.at(o.zA, n - 1), o.at(o.zC, n - 1), o.at(o.z, n - 1)
        a, b, c = (int(o.pos[x][n]) for x in (A, B, C))
        b0, b1, b2 = (int(b_typed[k][n]) for k in (0, 1, 2))
        log.check(("B0", n), b0, 13 * n + 6 - 2 * (za + 3 * zc))
        log.check(("B0=2C-n", n), b0, 2 * c - n)
        log.check(("B1", n), b1, 4 * n - z)
        log.check(("B1=A-1", n), b1, a - 1)
        log.check(("B2", n), b2, 7 * n + 2 - (za + 3 * zc))
        log.check(("B2=(B0+n-2)/2", n), 2 * b2, b0 + n - 2)
        log.check(("B2=C-1", n), b2, c - 1)
        log.check(("B", n), b, 2 * n - zc)
        log.check(("C", n), c, 7 * n + 3 - (za + 3 * zc))
        for k, v in ((0, b0), (1, b1), (2, b2)):
            log.check((f"lib B{k}", n), v, seq_b_typed(k, n))
        log.check(("lib B", n), b, seq_closed(B, n))
        log.check(("lib C", n), c, seq_closed(C, n))
    return 0, limit


@check("delta", "first differences of A, B, C in terms of t")
def _delta(limit, log):
    o = _oracle_for(limit + 1)
    for k in range(limit + 1):
        t = int(o.sym[k])
        dA = int(o.pos[A][k + 1] - o.pos[A][k])
        dB = int(o.pos[B][k + 1] - o.pos[B][k])
        dC = int(o.pos[C][k + 1] - o.pos[C][k])
        log.check(("A", k), 4 - t, dA)
        log.check(("B", k), 2 - t * (t - 1) // 2, dB)
        log.check(("C", k), 7 - t * (t + 1) // 2, dC)
    return 0, limit


@check("prop12", "letter counts from A(n+1) and B(n+1)")
def _prop12(limit, log):
    for n in range(-1, limit + 1):
        log.check(n, rank(n), rank_closed(n))
    return -1, limit


@check("prop13", "z(X(k)) closed forms")
def _prop13(limit, log):
    o = _oracle_for(limit)
    for x in LETTERS:
        for k in range(limit + 1):
            log.check((x.name, k), int(o.z[o.pos[x][k]]), z_of_seq(x, k))
    return 0, limit


@check("prop14", "the 18 composition identities X(Y(k)+1), X(Y(k))")
def _prop14(limit, log):
    for x, y in product(LETTERS, LETTERS):
        for shifted in (True, False):
            for k in range(limit + 1):
                log.check((x.name, y.name, shifted, k), compose_direct(x, y, k, shifted), compose(x, y, k, shifted))
    return 0, limit


@check("prop15", "the nine counts z_X(Y(k))")
def _prop15(limit, log):
    o = _oracle_for(limit)
    for x, y in product(LETTERS, LETTERS):
        for k in range(limit + 1):
            log.check((x.name, y.name, k), o.count(x, int(o.pos[y][k])), rank_of_seq(x, y, k))
    return 0, limit


@check("zn", "z(n) = z_A(n) + 2 z_C(n)")
def _zn(limit, log):
    o = _oracle_for(limit)
    for n in range(-1, limit + 1):
        log.check(n, o.at(o.z, n), o.at(o.zA, n) + 2 * o.at(o.zC, n))
        log.check(("lib", n), o.at(o.z, n), rank_fast(n).weighted)
    return -1, limit


@check("sumzX", "z_A(n) + z_B(n) + z_C(n) = n + 1")
def _sumzx(limit, log):
    o = _oracle_for(limit)
    for n in range(-1, limit + 1):
        log.check(n, n + 1, o.at(o.zA, n) + o.at(o.zB, n) + o.at(o.zC, n))
        r = rank_fast(n)
        log.check(("lib", n), n + 1, r.count_a + r.count_b + r.count_c)
    return -1, limit


@check("zXX", "z_X(X(k)) = k + 1")
def _zxx(limit, log):
    o = _oracle_for(limit)
    for x in LETTERS:
        for k in range(limit + 1):
            log.check((x.name, k), k + 1, o.count(x, int(o.pos[x][k])))
            log.check((x.name, "lib", k), k + 1, rank_of_seq(x, x, k))
    return 0, limit


@check("abcn", "C(n) - (A(n) + B(n)) = n + 2")
def _abcn(limit, log):
    o = _oracle_for(limit)
    for n in range(limit + 1):
        a, b, c = (int(o.pos[x][n]) for x in (A, B, C))
        log.check(n, n + 2, c - a - b)
        log.check(("lib", n), 0, abc_identity_gap(n))
    return 0, limit


# ---------------------------------------------------------------------------
# ZT codec


@check("zt_roundtrip", "zt_decode(zt_encode(N)) = N")
def _zt_roundtrip(limit, log):
    for N in range(1, limit + 1):
        w = zt.zt_encode(N)
        log.check(N, N, zt.zt_decode(w))
        log.check(("len", N), len(w), zt.zt_length(N))
    return 1, limit


def valid_zt_words(max_len: int) -> Iterable[str]:
    """Every binary word with a leading 1 and no 111, up to ``max_len`` digits."""
    for length in range(1, max_len + 1):
        for bits in range(1 << (length - 1), 1 << length):
            w = format(bits, "b")
            if "111" not in w:
                yield w


@check("zt_uniqueness", "every N below the enumeration bound has exactly one ZT word")
def _zt_uniqueness(limit, log):
    max_len = max(12, zt.zt_length(max(limit, 1)))
    seen: dict[int, str] = {}
    for w in valid_zt_words(max_len):
        v = zt.zt_decode(w)
        if v in seen:
            log.add(("duplicate", v), seen[v], w)
        seen[v] = w
        log.check(("reencode", w), w, zt.zt_encode(v))
    bound = tribonacci(max_len + 3) - 1
    log.check("values", list(range(1, bound + 1)), sorted(seen))
    return 1, bound


@check("zt_order", "numeric order equals length-then-lexicographic order of ZT words")
def _zt_order(limit, log):
    prev = zt.zt_encode(1)
    for N in range(2, limit + 1):
        w = zt.zt_encode(N)
        if not (len(prev), prev) < (len(w), w):
            log.add(N, f"> {prev}", w)
        prev = w
    return 1, limit


@check("zt_census", "number of ZT words of each length follows 1, 2, 3, 6, 11, 20, 37, ...")
def _zt_census(limit, log):
    # companion tribonacci numbers with inputs 0, 1, 0; count for length n is term n + 2
    companion = [0, 1, 0]
    while len(companion) < 80:
        companion.append(companion[-1] + companion[-2] + companion[-3])
    top = max(7, zt.zt_length(max(limit, 1)) - 1)
    bound = tribonacci(top + 3) - 1
    counts = [0] * (top + 1)
    for N in range(1, bound + 1):
        counts[zt.zt_length(N)] += 1
    log.check("first7", [1, 2, 3, 6, 11, 20, 37], counts[1:8])
    for n in range(1, top + 1):
        log.check(n, companion[n + 2], counts[n])
    return 1, bound


# ---------------------------------------------------------------------------
# ABC codec


@check("abc_roundtrip", "abc_decode(abc_encode(N)) = N")
def _abc_roundtrip(limit, log):
    for N in range(limit + 1):
        w = abc_codec.abc_encode(N)
        log.check(N, N, abc_codec.abc_decode(w))
        log.check(("valid", N), [], abc_codec.abc_validate(w))
    return 0, limit


def valid_abc_words(max_len: int) -> Iterable[str]:
    """Every word over 0/1/2 ending in 0 whose previous letter (if any) is 1 or 2."""
    yield "0"
    for length in range(2, max_len + 1):
        for body in product("012", repeat=length - 2):
            for last in "12":
                yield "".join(body) + last + "0"


@check("abc_uniqueness", "valid ABC words up to length 10 decode to distinct values and re-encode")
def _abc_uniqueness(limit, log):
    seen: dict[int, str] = {}
    for w in valid_abc_words(10):
        v = abc_codec.abc_decode(w)
        if v in seen:
            log.add(("duplicate", v), seen[v], w)
        seen[v] = w
        log.check(("reencode", w), w, abc_codec.abc_encode(v))
    return 1, 10


@check("abc_termination", "X(k) > k for k >= 1, B(0) = 0")
def _abc_termination(limit, log):
    log.check("B(0)", 0, seq(B, 0))
    for x in LETTERS:
        for k in range(1, limit + 1):
            v = seq(x, k)
            if v <= k:
                log.add((x.name, k), f"> {k}", v)
    return 1, limit


# ---------------------------------------------------------------------------
# string transforms


@check("equivalence", "string pipeline agrees with both codecs")
def _equivalence(limit, log):
    for N in range(1, limit + 1):
        z, a = zt.zt_encode(N), abc_codec.abc_encode(N)
        log.check(("zt->abc", N), a, transform.convert(z))
        log.check(("abc->zt", N), z, transform.convert_back(a))
    return 1, limit


@check("inversion", "convert and convert_back are mutually inverse")
def _inversion(limit, log):
    for N in range(1, limit + 1):
        z, a = zt.zt_encode(N), abc_codec.abc_encode(N)
        log.check(("zt", N), z, transform.convert_back(transform.convert(z)))
        log.check(("abc", N), a, transform.convert(transform.convert_back(a)))
    return 1, limit


@check("bbar_versions", "both inverse substitution versions give the hat word")
def _bbar_versions(limit, log):
    for N in range(1, limit + 1):
        hat = transform.zt_to_hat(zt.zt_encode(N))
        w = transform.hat_to_abdx(hat)
        log.check(("v1", N), hat, transform.abdx_to_hat(w, 1))
        log.check(("v2", N), hat, transform.abdx_to_hat(w, 2))
    return 1, limit


@check("abdx_structure", "ABDX words from both directions agree and pass the validator")
def _abdx_structure(limit, log):
    for N in range(1, limit + 1):
        w1 = transform.hat_to_abdx(transform.zt_to_hat(zt.zt_encode(N)))
        w2 = transform.abc_to_abdx(abc_codec.abc_encode(N))
        log.check(("same", N), w1, w2)
        log.check(("valid", N), [], transform.abdx_validate(w1))
    return 1, limit


@check("lemma3", "tribons and doublets of ABDX words")
def _lemma3(limit, log):
    census = transform.tribon_census(limit)
    log.check("tribons", sorted(transform.TRIBONS), sorted(census.tribons))
    extra = sorted(set(census.doublets) - transform.DOUBLETS)
    log.check("doublets", [], extra)
    log.check("terminal-only", [], sorted(census.nonterminal & (transform.TERMINAL_TRIBONS | transform.TERMINAL_DOUBLETS)))
    return 1, limit


_NUMERIC_MODULES = {"tribabc.sequences", "tribabc.word", "tribabc.abc", "tribabc.zt", "numpy"}


@check("purity", "the transform module holds no numeric functions")
def _purity(limit, log):
    for name, obj in vars(transform).items():
        if callable(obj) and getattr(obj, "__module__", None) in _NUMERIC_MODULES:
            log.add(name, "word-only dependency", obj.__module__)
    return 0, 0


@check("oeis", "bundled b-files match the local generators")
def _oeis(limit, log):
    from .oeis import BINDINGS, bundled_bfile, compare, data_dir

    for path in sorted(data_dir().glob("b*.txt")):
        seq_id = "A" + path.stem[1:]
        binding = BINDINGS.get(seq_id)
        if binding is None:
            continue
        bf = bundled_bfile(seq_id)
        report = compare(binding, bf, min(limit, len(bf)))
        for item in report.violations:
            log.add((seq_id,) + (item[0],), item[1], item[2])
        log.count += report.violation_count - len(report.violations)
    return 0, limit


# ---------------------------------------------------------------------------


def _run_one(check_id: str, limit: int, cap: int) -> CheckReport:
    fn, _ = CHECKS[check_id]
    log = ViolationLog(cap)
    start = time.perf_counter()
    lo, hi = fn(limit, log)
    return CheckReport(check_id, (lo, hi), log.items, log.count, time.perf_counter() - start)


def run_checks(selection: Iterable[str] | None, limit: int, workers: int = 1, cap: int = 10) -> list[CheckReport]:
    """Run the selected checks (all when ``selection`` is None) up to ``limit``.

    Reports come back in selection order whatever ``workers`` is.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    ids = list(CHECKS) if selection is None else list(selection)
    unknown = [c for c in ids if c not in CHECKS]
    if unknown:
        raise UnknownCheckError(f"unknown check id(s): {', '.join(unknown)}")
    if workers <= 1:
        return [_run_one(c, limit, cap) for c in ids]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda c: _run_one(c, limit, cap), ids))
