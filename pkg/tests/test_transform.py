import pytest
from hypothesis import given, settings, strategies as st

from tribabc import transform
from tribabc.abc import abc_encode
from tribabc.errors import ValidationError
from tribabc.transform import (
    DOUBLETS,
    TRIBONS,
    abc_to_abdx,
    abdx_to_abc,
    abdx_to_hat,
    abdx_validate,
    convert,
    convert_back,
    convert_stages,
    hat_to_abdx,
    hat_to_zt,
    hat_validate,
    tribon_census,
    zt_to_hat,
)
from tribabc.zt import zt_encode


def test_worked_hat_example():
    assert hat_to_abdx("0101010011010") == "A.A.A.Bxx.AB"


def test_stages_30():
    stages = convert_stages("100110")
    assert stages == {"zt": "100110", "hat": "00110010", "abdx": "Bxx.BAB", "abc": "02010"}
    assert convert_stages("02010", "abc") == stages


def test_convert_small():
    for N in range(1, 2000):
        z, a = zt_encode(N), abc_encode(N)
        assert convert(z) == a
        assert convert_back(a) == z
        assert convert_back(a, version=1) == z


@pytest.mark.parametrize("v", [1, 2])
def test_versions_agree(v):
    for N in range(1, 1000):
        hat = zt_to_hat(zt_encode(N))
        assert abdx_to_hat(hat_to_abdx(hat), v) == hat


def test_hat_round_trip():
    assert zt_to_hat("1101") == "010110"
    assert hat_to_zt("010110") == "1101"


@pytest.mark.parametrize("word", ["AA", "A..B", ".AB", "xAB", "xxxB", "A.A", "ABAB", "BB", "B", "AyB"])
def test_abdx_validator_rejects(word):
    assert abdx_validate(word)
    with pytest.raises(ValidationError):
        abdx_to_abc(word)


def test_abdx_validator_kinds():
    assert [v.kind for v in abdx_validate("A..AB")][0] == "double-dot"
    assert "bad-terminal" in [v.kind for v in abdx_validate("A.A.")]
    assert "bad-cross" in [v.kind for v in abdx_validate("x.AB")]


def test_other_validators():
    assert hat_validate("0110") == []
    assert hat_validate("1110")
    with pytest.raises(ValidationError):
        zt_to_hat("0101")
    with pytest.raises(ValidationError):
        abc_to_abdx("0")
    with pytest.raises(ValidationError):
        convert_back("100")
    with pytest.raises(ValueError):
        convert_stages("1", "dec")
    with pytest.raises(ValueError):
        abdx_to_hat("AB", 3)


def test_census_small():
    census = tribon_census(10**4)
    assert set(census.tribons) == TRIBONS
    assert set(census.doublets) <= DOUBLETS
    # terminal factors never appear mid-word
    for f in transform.TERMINAL_TRIBONS | transform.TERMINAL_DOUBLETS:
        assert f not in census.nonterminal
    # the hat context of BAB at the end of a word
    assert census.contexts["BAB"] == {"0010|"}


@settings(deadline=None)
@given(st.integers(min_value=1, max_value=10**15))
def test_convert_property(N):
    z, a = zt_encode(N), abc_encode(N)
    assert convert(z) == a
    assert convert_back(a) == z
    assert abdx_validate(abc_to_abdx(a)) == []


def test_pipeline_is_string_only(monkeypatch):
    import tribabc.abc as abc_mod
    import tribabc.sequences as seq_mod
    import tribabc.word as word_mod
    import tribabc.zt as zt_mod

    pairs = [(zt_encode(N), abc_encode(N)) for N in range(1, 3000)]

    def boom(*args, **kwargs):
        raise AssertionError("numeric call from the string pipeline")

    for mod, name in [(zt_mod, "zt_decode"), (zt_mod, "zt_encode"), (abc_mod, "abc_decode"),
                      (abc_mod, "abc_encode"), (seq_mod, "seq"), (seq_mod, "classify"),
                      (word_mod, "rank"), (word_mod, "rank_fast")]:
        monkeypatch.setattr(mod, name, boom)
    for z, a in pairs:
        assert convert(z) == a
        assert convert_back(a) == z
