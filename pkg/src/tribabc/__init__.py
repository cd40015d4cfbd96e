"""Tribonacci numeration systems: ZT words, ABC words and the string
transforms between them, plus the A, B, C sequence identities."""

from .abc import abc_blockform, abc_decode, abc_encode, abc_validate
from .errors import ValidationError, Violation
from .sequences import classify, compose, rank_of_seq, seq, seq_b_typed, seq_closed, z_of_seq
from .transform import convert, convert_back, tribon_census
from .word import Letter, RankProfile, rank, rank_fast, t_at, tribo_word, tribonacci
from .zt import greedy_trace, zt_decode, zt_encode, zt_length

__version__ = "0.1.0"

__all__ = [
    "Letter",
    "RankProfile",
    "ValidationError",
    "Violation",
    "abc_blockform",
    "abc_decode",
    "abc_encode",
    "abc_validate",
    "classify",
    "compose",
    "convert",
    "convert_back",
    "greedy_trace",
    "rank",
    "rank_fast",
    "rank_of_seq",
    "seq",
    "seq_b_typed",
    "seq_closed",
    "t_at",
    "tribo_word",
    "tribon_census",
    "tribonacci",
    "z_of_seq",
    "zt_decode",
    "zt_encode",
    "zt_length",
]
