import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tribabc.errors import NotInImageError
from tribabc.word import (
    MAX_VALUE,
    PARTITION_BLOCKS,
    Letter,
    RankProfile,
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


def naive_word(length):
    s = "0"
    while len(s) < length:
        s = "".join({"0": "01", "1": "02", "2": "0"}[c] for c in s)
    return s[:length]


def test_tribonacci_start():
    assert [tribonacci(l) for l in range(12)] == [0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149]


def test_tribonacci_recurrence_and_overflow():
    l = 3
    while True:
        try:
            v = tribonacci(l)
        except OverflowError:
            break
        assert v == tribonacci(l - 1) + tribonacci(l - 2) + tribonacci(l - 3)
        assert v <= MAX_VALUE
        l += 1
    assert tribonacci(l - 1) + tribonacci(l - 2) + tribonacci(l - 3) > MAX_VALUE
    with pytest.raises(ValueError):
        tribonacci(-1)


def test_small_words():
    assert [tribo_word(l) for l in range(4)] == ["2", "0", "01", "0102"]
    assert tribo_word(5) == "0102010010201"
    for l in range(1, 16):
        assert len(tribo_word(l)) == tribonacci(l + 2)


@pytest.mark.parametrize("l", range(1, 21))
def test_block_counts_by_counting(l):
    w = tribo_word(l)
    assert block_counts(l) == (w.count("0"), w.count("1"), w.count("2"))


def test_prefix_matches_naive():
    ref = naive_word(5000)
    assert word_prefix(5000) == ref
    assert "".join(map(str, word_array(5000))) == ref
    assert [t_at(n) for n in range(200)] == [int(c) for c in ref[:200]]
    stream = word_stream()
    assert "".join(str(next(stream)) for _ in range(3000)) == ref[:3000]


def test_prefix_counts_columns_are_symbols():
    ref = naive_word(100)
    counts = prefix_counts(100)
    for n in (0, 5, 42, 99):
        assert list(counts[n]) == [ref[: n + 1].count(c) for c in "012"]


def test_morphism_round_trip_and_fixed_point():
    w = word_prefix(1000)
    image = morphism_apply(w)
    assert image.startswith(w)
    assert morphism_inverse(image) == w
    assert morphism_apply("012") == "01020"


def test_morphism_inverse_rejects():
    with pytest.raises(NotInImageError):
        morphism_inverse("10")
    with pytest.raises(NotInImageError):
        morphism_inverse("0220")
    with pytest.raises(ValueError):
        morphism_apply("013")


@given(st.text(alphabet="012", max_size=60))
def test_morphism_inverse_property(w):
    assert morphism_inverse(morphism_apply(w)) == w


def test_rank_profile_from_worked_examples():
    assert rank(4) == RankProfile(4, 1, 3, 1)
    r = rank_fast(43)
    assert (r.count_a, r.count_b, r.count_c) == (13, 24, 7)
    assert rank(-1) == rank_fast(-1) == RankProfile(-1, 0, 0, 0)
    assert r.weighted == 13 + 2 * 7
    assert r.count("A") == 13 and r.count(Letter.B) == 24 and r.count(2) == 7


def test_rank_fast_matches_rank_block():
    for n in range(-1, 20000):
        assert rank_fast(n) == rank(n)


@settings(deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_rank_fast_property(n):
    assert rank_fast(n) == rank(n)


def test_letter_fast_matches_scan():
    sym = word_array(50000)
    assert all(letter_fast(n) == sym[n] for n in range(50000))


@given(st.integers(min_value=0, max_value=10**12), st.sampled_from(list(Letter)))
def test_select_inverts_rank(n, x):
    k = rank_fast(n).count(x)
    if k:
        p = select(x, k - 1)
        assert p <= n and letter_fast(p) == x
        assert rank_fast(p).count(x) == k


def test_select_small():
    sym = word_array(1000)
    for x in Letter:
        pos = np.flatnonzero(sym == int(x))[:100]
        assert [select(x, k) for k in range(100)] == list(pos)


def test_width_guard():
    with pytest.raises(OverflowError):
        rank_fast(MAX_VALUE)


def test_char_value_partition():
    for n in range(500):
        values = [char_value(x, n) for x in Letter]
        assert sum(values) == 1
        assert values[t_at(n)] == 1


@pytest.mark.parametrize("variant", sorted(PARTITION_BLOCKS))
def test_partitions_regenerate_word(variant):
    gen = partition_stream(variant)
    assert "".join(str(next(gen)) for _ in range(5000)) == word_prefix(5000)


def test_letter_parse():
    assert Letter.parse("c") is Letter.C
    assert Letter.parse("0") is Letter.B
    assert Letter.parse(1) is Letter.A
    with pytest.raises(ValueError):
        Letter.parse("D")
