"""Acceptance criteria, one test each.

Every test records a ``CRITERION n PASS|FAIL`` line; pytest prints them
in a section at the end, and ``python tests/test_acceptance.py`` prints
them directly.  Limits and time budgets are fixed here.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, read_golden  # noqa: E402

import tribabc.abc as abc_mod  # noqa: E402
import tribabc.sequences as seq_mod  # noqa: E402
import tribabc.word as word_mod  # noqa: E402
import tribabc.zt as zt_mod  # noqa: E402
from tribabc import oeis, transform, verify  # noqa: E402
from tribabc.abc import abc_encode, abc_encode_chain  # noqa: E402
from tribabc.sequences import seq  # noqa: E402
from tribabc.word import Letter, letter_fast, rank, rank_fast, select, t_at  # noqa: E402
from tribabc.zt import greedy_trace, zt_encode  # noqa: E402

TABLE_BUDGET = 1.0
EQUIVALENCE_N = 10**5
EQUIVALENCE_BUDGET = 30.0
IDENTITY_N = 10**5
COMPOSITION_K = 10**4
IDENTITY_BUDGET = 60.0
PARTITION_N = 10**4
CENSUS_N = 10**4
ZT_MAX_LEN = 12
ABC_MAX_LEN = 10
RANK_N = 10**6
SELECT_SAMPLES = 1000
SELECT_MAX = 10**9
RANK_BUDGET = 30.0
OEIS_IDS = ["A278039", "A278040", "A278041", "A080843", "A278038", "A278044", "A319195"]


def record(n, ok, detail):
    line = f"CRITERION {n:2d} {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    assert ok, line


def _table(n, name, produce, budget=TABLE_BUDGET):
    rows = read_golden(name)
    start = time.perf_counter()
    got = produce()
    elapsed = time.perf_counter() - start
    bad = [(r, g) for r, g in zip(rows, got) if r != g]
    ok = not bad and len(got) == len(rows) and elapsed < budget
    record(n, ok, f"{name}: {len(rows)} rows, mismatches={len(bad)}, {elapsed:.3f}s (< {budget}s)")


def test_c01_table1():
    _table(1, "table1.txt", lambda: [
        [str(v) for v in (n, t_at(n), seq(Letter.A, n), seq(Letter.B, n), seq(Letter.C, n))]
        for n in range(80)
    ])


def test_c02_table2():
    _table(2, "table2.txt", lambda: [[str(N), zt_encode(N)] for N in range(1, 101)])


def test_c03_table3():
    _table(3, "table3.txt", lambda: [[str(N), abc_encode(N)] for N in range(1, 101)])


def test_c04_worked_examples():
    tr = greedy_trace(263)
    chain = [(x.name, k) for x, k in abc_encode_chain(38)]
    ok = (
        tr.word == "110101010"
        and list(tr.floors) == [149, 81, 24, 7, 2]
        and list(tr.indices) == [8, 7, 5, 3, 1]
        and abc_encode(38) == "10020"
        and chain == [("A", 11), ("B", 6), ("B", 3), ("C", 0), ("B", 0)]
    )
    record(4, ok, f"ZT(263)={tr.word} floors={list(tr.floors)} indices={list(tr.indices)}; "
                  f"ABC(38)={abc_encode(38)} chain={chain}")


def _forbid():
    def boom(*a, **k):
        raise AssertionError("numeric routine called from the string pipeline")
    return boom


def test_c05_equivalence(monkeypatch):
    zts = [zt_encode(N) for N in range(1, EQUIVALENCE_N + 1)]
    abcs = [abc_encode(N) for N in range(1, EQUIVALENCE_N + 1)]
    # any decode or sequence lookup during conversion now raises
    for mod, name in [(zt_mod, "zt_decode"), (zt_mod, "zt_encode"), (abc_mod, "abc_decode"),
                      (abc_mod, "abc_encode"), (seq_mod, "seq"), (seq_mod, "classify"),
                      (word_mod, "rank"), (word_mod, "rank_fast"), (word_mod, "t_at")]:
        monkeypatch.setattr(mod, name, _forbid())
    start = time.perf_counter()
    bad = 0
    for z, a in zip(zts, abcs):
        bad += transform.convert(z) != a
        bad += transform.convert_back(a) != z
    elapsed = time.perf_counter() - start
    monkeypatch.undo()
    static = verify.run_checks(["purity"], 1)[0]
    ok = bad == 0 and static.passed and elapsed < EQUIVALENCE_BUDGET
    record(5, ok, f"N=1..{EQUIVALENCE_N}: mismatches={bad}, string-only={static.passed}, "
                  f"{elapsed:.2f}s (< {EQUIVALENCE_BUDGET}s)")


def test_c06_identities():
    start = time.perf_counter()
    reports = verify.run_checks(["prop10", "prop11", "prop12", "prop13", "zn", "sumzX", "zXX", "abcn"], IDENTITY_N)
    reports += verify.run_checks(["prop14", "prop15"], COMPOSITION_K)
    elapsed = time.perf_counter() - start
    failed = [r.line() for r in reports if not r.passed]
    ok = not failed and elapsed < IDENTITY_BUDGET
    record(6, ok, f"{len(reports)} checks, violations={sum(r.violation_count for r in reports)}, "
                  f"{elapsed:.2f}s (< {IDENTITY_BUDGET}s) {' '.join(failed)}")


def test_c07_partitions():
    report = verify.run_checks(["lemma9"], PARTITION_N)[0]
    record(7, report.passed, f"variants 1-4, first {PARTITION_N} symbols: violations={report.violation_count}")


def test_c08_census():
    census = transform.tribon_census(CENSUS_N)
    tribons = set(census.tribons)
    doublets = set(census.doublets)
    ok = tribons == set(transform.TRIBONS) and len(tribons) == 20 and doublets <= transform.DOUBLETS
    record(8, ok, f"N=1..{CENSUS_N}: tribons {len(tribons)}/20 exact={tribons == set(transform.TRIBONS)}, "
                  f"doublets {sorted(doublets)} within the 11={doublets <= transform.DOUBLETS}")


def _bijective(words, decode, encode):
    seen = {}
    bad = 0
    for w in words:
        v = decode(w)
        bad += v in seen
        seen[v] = w
        bad += encode(v) != w
    return len(seen), bad


def test_c09_uniqueness():
    zt_n, zt_bad = _bijective(verify.valid_zt_words(ZT_MAX_LEN), zt_mod.zt_decode, zt_encode)
    abc_n, abc_bad = _bijective(verify.valid_abc_words(ABC_MAX_LEN), abc_mod.abc_decode, abc_encode)
    # valid ZT words of length <= L cover exactly 1..T(L+3)-1
    ok = zt_bad == 0 and abc_bad == 0 and zt_n == word_mod.tribonacci(ZT_MAX_LEN + 3) - 1
    record(9, ok, f"ZT len<={ZT_MAX_LEN}: {zt_n} words, defects={zt_bad}; "
                  f"ABC len<={ABC_MAX_LEN}: {abc_n} words, defects={abc_bad}")


def test_c10_rank_fast():
    start = time.perf_counter()
    bad = sum(rank_fast(n) != rank(n) for n in range(-1, RANK_N + 1))
    rng = random.Random(20181016)
    sel_bad = 0
    for _ in range(SELECT_SAMPLES):
        n = rng.randrange(SELECT_MAX + 1)
        x = Letter(letter_fast(n))
        sel_bad += select(x, rank_fast(n).count(x) - 1) != n
    elapsed = time.perf_counter() - start
    ok = bad == 0 and sel_bad == 0 and elapsed < RANK_BUDGET
    record(10, ok, f"rank_fast=rank for n<={RANK_N}: mismatches={bad}; select(rank) at {SELECT_SAMPLES} "
                   f"positions <= {SELECT_MAX}: mismatches={sel_bad}; {elapsed:.2f}s (< {RANK_BUDGET}s)")


def test_c11_oeis():
    results = []
    for seq_id in OEIS_IDS:
        bf = oeis.bundled_bfile(seq_id)
        results.append(oeis.compare(oeis.BINDINGS[seq_id], bf))
    failed = [r.line() for r in results if not r.passed]
    record(11, not failed, " ".join(f"{r.check_id}[{r.range[0]},{r.range[1]}]={r.violation_count}" for r in results)
           + (" " + " ".join(failed) if failed else ""))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
