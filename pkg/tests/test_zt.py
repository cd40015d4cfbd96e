import pytest
from hypothesis import given, strategies as st

from tribabc.errors import NoRepresentationError, ValidationError
from tribabc.word import tribonacci
from tribabc.zt import greedy_trace, tribonacci_floor, zt_decode, zt_encode, zt_length, zt_validate

MAX_N = (1 << 64) - 1


def test_table2(golden):
    for N, word in golden("table2.txt"):
        assert zt_encode(int(N)) == word


def test_greedy_trace_263():
    tr = greedy_trace(263)
    assert tr.word == "110101010"
    assert list(tr.remainders) == [263, 114, 33, 9, 2, 0]
    assert list(tr.floors) == [149, 81, 24, 7, 2]
    assert list(tr.indices) == [8, 7, 5, 3, 1]


def test_floor():
    assert tribonacci_floor(1) == (1, 0)
    assert tribonacci_floor(263) == (149, 8)
    assert tribonacci_floor(148) == (81, 7)


def test_decode_examples():
    assert zt_decode("1") == 1
    assert zt_decode("110101010") == 263
    assert zt_decode("100110") == 30


@pytest.mark.parametrize(
    "word, kind",
    [("", "empty"), ("0", "leading-zero"), ("0110", "leading-zero"), ("1110", "triple-ones"), ("1021", "non-binary")],
)
def test_validator(word, kind):
    kinds = [v.kind for v in zt_validate(word)]
    assert kind in kinds
    with pytest.raises(ValidationError) as info:
        zt_decode(word)
    assert info.value.word == word
    assert kind in [v.kind for v in info.value.violations]


def test_no_representation_of_zero():
    with pytest.raises(NoRepresentationError):
        zt_encode(0)


def test_lengths():
    for N in range(1, 3000):
        assert zt_length(N) == len(zt_encode(N))
    # length L first appears at T(L + 2)
    for L in range(1, 30):
        assert zt_length(tribonacci(L + 2)) == L
        if L > 1:
            assert zt_length(tribonacci(L + 2) - 1) == L - 1


def test_width():
    w = zt_encode(MAX_N)
    assert zt_decode(w) == MAX_N
    with pytest.raises(OverflowError):
        zt_encode(MAX_N + 1)
    with pytest.raises(OverflowError):
        zt_decode("1" + "0" * 80)


@given(st.integers(min_value=1, max_value=MAX_N))
def test_round_trip(N):
    w = zt_encode(N)
    assert zt_validate(w) == []
    assert zt_decode(w) == N


@given(st.text(alphabet="01", min_size=1, max_size=40))
def test_valid_words_decode_back(w):
    if zt_validate(w):
        with pytest.raises(ValidationError):
            zt_decode(w)
    else:
        assert zt_encode(zt_decode(w)) == w
