"""Regenerate the bundled b-file fixtures in src/tribabc/data.

The sandbox that produced these files had no route to oeis.org, so the
values come from deliberately naive code that does not import tribabc:
string rewriting for the word, a lookup table of every valid binary word
for ZT, and a bottom-up search over ABC words.  To check against the
real OEIS, drop the downloaded bNNNNNN.txt files into a directory and
point TRIBABC_DATA_DIR at it.

    python tools/make_fixtures.py
"""

from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "tribabc" / "data"
HEADER = "# {id} first {n} terms, generated locally by tools/make_fixtures.py\n"


def word(length):
    s = "0"
    rules = {"0": "01", "1": "02", "2": "0"}
    while len(s) < length:
        s = "".join(rules[c] for c in s)
    return s[:length]


def zt_table(max_len):
    weights = [1, 2, 4]
    while len(weights) < max_len:
        weights.append(weights[-1] + weights[-2] + weights[-3])
    table = {}
    for length in range(1, max_len + 1):
        for bits in range(1 << (length - 1), 1 << length):
            w = format(bits, "b")
            if "111" in w:
                continue
            value = sum(wt for wt, ch in zip(weights, reversed(w)) if ch == "1")
            assert value not in table, (value, w, table.get(value))
            table[value] = w
    return table


def abc_table(max_n, pos):
    # grow words leftwards from "0"; X(v) >= v so values above max_n are dropped
    table = {0: "0"}
    frontier = []
    for letter in "12":
        v = pos[letter][0]
        if v <= max_n:
            frontier.append((v, letter + "0"))
    while frontier:
        nxt = []
        for v, w in frontier:
            assert v not in table, (v, w, table[v])
            table[v] = w
            for letter in "012":
                u = pos[letter][v]
                if u <= max_n:
                    nxt.append((u, letter + w))
        frontier = nxt
    assert sorted(table) == list(range(max_n + 1))
    return table


def write(seq_id, start, values):
    path = OUT / f"b{seq_id[1:]}.txt"
    with open(path, "w", newline="\n") as f:
        f.write(HEADER.format(id=seq_id, n=len(values)))
        for i, v in enumerate(values, start):
            f.write(f"{i} {v}\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    t = word(20000)
    pos = {c: [i for i, ch in enumerate(t) if ch == c] for c in "012"}
    n = 1000

    write("A080843", 0, [int(c) for c in t[:n]])
    write("A278040", 0, pos["1"][:n])
    write("A278039", 0, pos["0"][:n])
    write("A278041", 0, pos["2"][:n])
    write("A003144", 1, [p + 1 for p in pos["0"][:n]])
    write("A003145", 1, [p + 1 for p in pos["1"][:n]])
    write("A003146", 1, [p + 1 for p in pos["2"][:n]])

    z, acc = [], 0
    for ch in t[:n]:
        acc += int(ch)
        z.append(acc)
    write("A319198", 0, z)

    zeros_followed = [i for i in range(len(t) - 1) if t[i] == "0" and t[i + 1] == "0"]
    write("A319968", 1, zeros_followed[:n])

    zt = zt_table(12)
    write("A278038", 1, [int(zt[N]) for N in range(1, n + 1)])
    write("A278044", 1, [len(zt[N]) for N in range(1, n + 1)])

    abc = abc_table(n, {"0": pos["0"], "1": pos["1"], "2": pos["2"]})
    digits = []
    N = 0
    while len(digits) < n:
        digits.extend(int(c) for c in abc[N])
        N += 1
    write("A319195", 0, digits[:n])
    write("A316714", 0, [len(abc[N]) for N in range(n)])
    write("A316715", 0, [abc[N].count("0") for N in range(n)])
    write("A316716", 0, [abc[N].count("1") for N in range(n)])
    write("A316717", 0, [abc[N].count("2") for N in range(n)])


if __name__ == "__main__":
    main()
