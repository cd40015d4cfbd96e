"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 verification failure, 3 usage error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import abc as abc_codec
from . import oeis, transform, verify, zt
from .errors import TriboError
from .sequences import seq, seq_b_typed
from .word import Letter, word_prefix

EXIT_OK, EXIT_INVALID, EXIT_FAILED, EXIT_USAGE = 0, 1, 2, 3
DEFAULT_MAX_N = 1 << 62


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _guard(args, value: int, what: str = "N") -> int:
    if value > args.max_n:
        raise UsageError(f"{what} = {value} exceeds --max-n {args.max_n}")
    return value


def _cmd_word(args):
    _guard(args, args.len, "length")
    print(word_prefix(args.len))


def _cmd_seq(args):
    name = args.name.upper()
    if args.to < args.from_:
        raise UsageError("--to must be >= --from")
    _guard(args, args.to, "index")
    if name in ("A", "B", "C"):
        fn = lambda n: seq(Letter[name], n)  # noqa: E731
    else:
        fn = lambda n: seq_b_typed(int(name[1]), n)  # noqa: E731
    for n in range(args.from_, args.to + 1):
        print(n, fn(n))


def _cmd_encode_zt(args):
    N = _guard(args, args.N)
    if N == 0:
        print("0 has no ZT representation (defined for N >= 1)", file=sys.stderr)
        return EXIT_INVALID
    trace = zt.greedy_trace(N)
    print(trace.word)
    if args.trace:
        print("remainders", *trace.remainders)
        print("floors", *trace.floors)
        print("indices", *trace.indices)


def _cmd_decode_zt(args):
    print(zt.zt_decode(args.bits))


def _cmd_encode_abc(args):
    print(abc_codec.abc_encode(_guard(args, args.N)))


def _cmd_decode_abc(args):
    print(abc_codec.abc_decode(args.word))


def _cmd_convert(args):
    stages = transform.convert_stages(args.word, args.source)
    if args.show_stages:
        order = ["zt", "hat", "abdx", "abc"] if args.source == "zt" else ["abc", "abdx", "hat", "zt"]
        for key in order:
            print(key, stages[key])
    else:
        print(stages["abc" if args.source == "zt" else "zt"])


def _cmd_table(args):
    if args.number == 1:
        for n in range(80):
            print(n, word_prefix(n + 1)[n], seq(Letter.A, n), seq(Letter.B, n), seq(Letter.C, n))
    elif args.number == 2:
        for N in range(1, 101):
            print(N, zt.zt_encode(N))
    else:
        for N in range(1, 101):
            print(N, abc_codec.abc_encode(N))


def _cmd_verify(args):
    checks = None if args.checks in (None, "all") else [c.strip() for c in args.checks.split(",") if c.strip()]
    try:
        reports = verify.run_checks(checks, args.limit, workers=args.workers)
    except KeyError as exc:
        raise UsageError(str(exc.args[0] if exc.args else exc)) from None
    sys.stdout.write(verify.reports_to_text(reports))
    if args.json:
        Path(args.json).write_text(verify.reports_to_json(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _cmd_oeis(args):
    binding = oeis.BINDINGS.get(args.id)
    if binding is None:
        raise UsageError(f"no binding for {args.id}; known: {', '.join(sorted(oeis.BINDINGS))}")
    path = Path(args.bfile) if args.bfile else oeis.data_dir() / f"b{args.id[1:]}.txt"
    if not path.exists():
        raise UsageError(f"b-file not found: {path}")
    report = oeis.compare(binding, oeis.load_bfile(path), args.limit)
    print(report.line())
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tribabc", description="Tribonacci ZT and ABC representations.")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="reject larger inputs (default 2^62)")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("word", help="prefix of the tribonacci word")
    s.add_argument("--len", type=int, required=True)
    s.set_defaults(fn=_cmd_word)

    s = sub.add_parser("seq", help="values of A, B, C, B0, B1 or B2")
    s.add_argument("name", choices=["A", "B", "C", "B0", "B1", "B2"], type=str.upper)
    s.add_argument("--from", dest="from_", type=int, default=0)
    s.add_argument("--to", type=int, required=True)
    s.set_defaults(fn=_cmd_seq)

    s = sub.add_parser("encode-zt", help="ZT word of N")
    s.add_argument("N", type=int)
    s.add_argument("--trace", action="store_true", help="print the greedy remainders, floors and indices")
    s.set_defaults(fn=_cmd_encode_zt)

    s = sub.add_parser("decode-zt", help="value of a ZT word")
    s.add_argument("bits")
    s.set_defaults(fn=_cmd_decode_zt)

    s = sub.add_parser("encode-abc", help="ABC word of N (0, 1, 2 = B, A, C)")
    s.add_argument("N", type=int)
    s.set_defaults(fn=_cmd_encode_abc)

    s = sub.add_parser("decode-abc", help="value of an ABC word")
    s.add_argument("word")
    s.set_defaults(fn=_cmd_decode_abc)

    s = sub.add_parser("convert", help="ZT <-> ABC without computing N")
    s.add_argument("--from", dest="source", choices=["zt", "abc"], required=True)
    s.add_argument("--show-stages", action="store_true")
    s.add_argument("word")
    s.set_defaults(fn=_cmd_convert)

    s = sub.add_parser("table", help="reproduce table 1, 2 or 3")
    s.add_argument("number", type=int, choices=[1, 2, 3])
    s.set_defaults(fn=_cmd_table)

    s = sub.add_parser("verify", help="run verification checks")
    s.add_argument("--checks", default="all", help="comma-separated ids, or 'all'")
    s.add_argument("--limit", type=int, default=10_000)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--json", help="also write one JSON record per check to this path")
    s.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("oeis", help="compare a b-file with the local generator")
    s.add_argument("--id", required=True, type=str.upper)
    s.add_argument("--bfile", help=f"path to bNNNNNN.txt (default: ${oeis.DATA_ENV} or bundled data)")
    s.add_argument("--limit", type=int)
    s.set_defaults(fn=_cmd_oeis)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        code = args.fn(args)
    except UsageError as exc:
        print(f"tribabc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TriboError, ValueError, OverflowError) as exc:
        print(f"tribabc: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
