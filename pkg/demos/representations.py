"""ZT and ABC representations side by side, and the string route between them.

Run with ``python demos/representations.py``.
"""

from tribabc import abc_decode, abc_encode, convert, convert_back, greedy_trace, zt_encode
from tribabc.abc import abc_encode_chain, abc_to_letters
from tribabc.transform import convert_stages

# %% greedy ZT: subtract the largest tribonacci number that fits
tr = greedy_trace(263)
print("263 =", " + ".join(map(str, tr.floors)), "->", tr.word)

# %% ABC: peel off one sequence at a time until B(0) = 0 remains
chain = abc_encode_chain(38)
print("38:", " -> ".join(f"{x.name}({k})" for x, k in chain), "=", abc_to_letters(abc_encode(38)))
print("decode 10020 ->", abc_decode("10020"))

# %% the two systems are linked by a pure rewrite through the hat and ABDX words
for N in (30, 38, 100, 263):
    stages = convert_stages(zt_encode(N))
    print(N, "  ".join(f"{k}={v}" for k, v in stages.items()))

# %% both directions agree with direct encoding
assert all(convert(zt_encode(N)) == abc_encode(N) for N in range(1, 5000))
assert all(convert_back(abc_encode(N)) == zt_encode(N) for N in range(1, 5000))
print("string conversion matches both encoders for N < 5000")
