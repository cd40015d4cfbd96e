"""The tribonacci word, its letter positions and fast rank/select.

Run with ``python demos/word_and_sequences.py``.
"""

import numpy as np

from tribabc import Letter, rank, rank_fast, seq, tribo_word
from tribabc.word import select, word_array

# %% finite words grow by the recursion tw(l) = tw(l-1) tw(l-2) tw(l-3)
for l in range(1, 7):
    print(l, tribo_word(l))

# %% A, B, C are the positions of 1, 0, 2; they split the nonnegative integers
print("A:", [seq(Letter.A, n) for n in range(10)])
print("B:", [seq(Letter.B, n) for n in range(10)])
print("C:", [seq(Letter.C, n) for n in range(10)])

# %% letter frequencies approach fixed ratios
sym = word_array(10**6)
print("frequencies of 0, 1, 2:", np.bincount(sym) / sym.size)

# %% rank_fast needs no scan at all, so it works far beyond any prefix we could store
print(rank(43), rank_fast(43))
n = 10**15
r = rank_fast(n)
print(f"counts up to {n}:", r.count_a, r.count_b, r.count_c)
print("the last C in that range sits at", select(Letter.C, r.count_c - 1))
