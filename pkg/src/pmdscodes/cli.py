"""Command-line front end.

Exit codes: 0 success / PASS, 1 undecodable / FAIL, 2 usage or config error.
Lines starting with ``#`` are human-readable commentary.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
import warnings
from pathlib import Path

from . import gf2poly
from .codec import ArrayCode, ErasurePattern, Undecodable
from .construction import InvalidParameters, Variant, build_parity_check
from .formats import ConfigError, parse_array, parse_config, parse_pattern, parse_tokens
from .galois import field_new
from .ring import ring_new
from .verify import check_lemma, figure1_scenarios, sample_sd_pattern, verify

FORMATS = """\
file formats (elements are lowercase hex, bit i = coefficient of x^i):
  config    key=value lines; keys variant, r, n, m, algebra, w, modulus, p
              variant=sd
              r=3
              n=5
              m=1
              algebra=field
              w=4
              modulus=13
  matrix    one row per line, hex entries separated by single spaces
              1 1 1 1 1 0 0 0 0 0 0 0 0 0 0
  data      r(n-m)-2 hex tokens, row-major, any whitespace
              1 0 a 3 f 2 0 0 7 1
  array     r lines of n hex tokens
              1 2 3 4 5
  pattern   one line of row:col pairs
              0:4 1:4 2:4 2:2 2:3
"""


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _params(args):
    try:
        params = parse_config(_read(args.config))
    except ConfigError as exc:
        raise UsageError("config: %s" % exc) from None
    return params


def _code(params) -> ArrayCode:
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return ArrayCode(params)
    except InvalidParameters as exc:
        raise UsageError("invalid parameters: %s" % exc) from None


def cmd_field_info(args) -> int:
    try:
        return _field_info(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _field_info(args) -> int:
    if args.p is not None:
        ring = ring_new(args.p)
        print("# %s" % ring.name)
        print("p %d" % ring.p)
        print("modulus %s" % gf2poly.to_hex(ring.modulus))
        print("order_alpha %d" % ring.order_alpha)
        print("factors %s" % " ".join(gf2poly.to_hex(f) for f in ring.factors))
        print("is_field %s" % ("yes" if ring.is_field else "no"))
        return 0
    if args.w is None:
        raise UsageError("field-info needs --w or --p")
    F = field_new(args.w, gf2poly.from_hex(args.modulus) if args.modulus else None)
    print("# %s = %s" % (F.name, gf2poly.format_poly(F.modulus)))
    print("w %d" % F.w)
    print("modulus %s" % gf2poly.to_hex(F.modulus))
    print("order_alpha %d" % F.order_alpha)
    print("primitive %s" % ("yes" if F.order_alpha == F.size - 1 else "no"))
    return 0


def cmd_construct(args) -> int:
    params = _params(args)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            pcm = build_parity_check(params)
    except InvalidParameters as exc:
        raise UsageError("invalid parameters: %s" % exc) from None
    head = "# %s\n# %dx%d parity-check matrix\n" % (params.describe(), *pcm.matrix.shape)
    _write(args.output, head + pcm.matrix.to_text() + "\n")
    return 0


def cmd_encode(args) -> int:
    params = _params(args)
    code = _code(params)
    try:
        data = parse_tokens(_read(args.data), params.algebra)
        arr = code.encode(data)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(args.output, arr.to_text() + "\n")
    return 0


def cmd_decode(args) -> int:
    params = _params(args)
    code = _code(params)
    try:
        arr = parse_array(_read(args.array), params)
        pattern = parse_pattern(_read(args.pattern)) if args.pattern else ErasurePattern()
        if args.cols:
            cols = [int(c) for c in args.cols.split(",") if c]
            pattern = pattern | ErasurePattern.columns(cols, params.r)
        if args.cells:
            pattern = pattern | ErasurePattern.parse(args.cells)
        pattern.check(params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = code.decode(arr, pattern)
    if isinstance(out, Undecodable):
        print("# %s" % params.describe(), file=sys.stderr)
        print(out.describe(), file=sys.stderr)
        return 1
    _write(args.output, out.to_text() + "\n")
    return 0


def cmd_verify(args) -> int:
    params = _params(args)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report = verify(params, args.property, jobs=args.jobs)
    except InvalidParameters as exc:
        raise UsageError("invalid parameters: %s" % exc) from None
    print("# property=%s %s" % (report.property, report.params))
    print(report.summary())
    if not report.passed:
        print("counterexample %s" % report.counterexample.to_text())
    return 0 if report.passed else 1


def cmd_lemma(args) -> int:
    params = _params(args)
    try:
        report = check_lemma(params.m, params.n, params.r, params.algebra)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print("# property=LEMMA %s" % report.params)
    print(report.summary())
    if not report.passed:
        c = report.counterexample
        print("counterexample i=%s j=%s ell=%d" % (",".join(map(str, c.i_list)), ",".join(map(str, c.j_list)), c.ell))
    return 0 if report.passed else 1


def cmd_scenarios(args) -> int:
    params = _params(args)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report = figure1_scenarios(
                params.with_variant(Variant.SD), params.with_variant(Variant.PMDS), seed=args.seed
            )
    except (ValueError, InvalidParameters) as exc:
        raise UsageError(str(exc)) from None
    print("# property=FIG1 algebra=%s" % params.algebra.name)
    for line in report.details:
        print(line)
    print(report.summary())
    return 0 if report.passed else 1


def cmd_bench(args) -> int:
    params = _params(args)
    code = _code(params)
    rng = random.Random(args.seed)
    size = params.algebra.size
    k = len(code.data_coords)
    stripes = [[rng.randrange(size) for _ in range(k)] for _ in range(args.stripes)]
    patterns = [sample_sd_pattern(params, rng) for _ in range(args.stripes)]

    t0 = time.perf_counter()
    encoded = [code.encode(d) for d in stripes]
    t1 = time.perf_counter()
    failures = 0
    for arr, pat in zip(encoded, patterns):
        out = code.decode(arr.erase(pat), pat)
        failures += out != arr
    t2 = time.perf_counter()

    symbols = args.stripes * params.length
    print("# %s" % params.describe())
    print("# stripes=%d seed=%d" % (args.stripes, args.seed))
    print("# encode %.3fs  %.0f stripes/s  %.0f symbols/s" % (t1 - t0, args.stripes / (t1 - t0), symbols / (t1 - t0)))
    print("# decode %.3fs  %.0f stripes/s  %.0f symbols/s" % (t2 - t1, args.stripes / (t2 - t1), symbols / (t2 - t1)))
    print("mismatches %d" % failures)
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmdscodes",
        description="(m;2) Sector-Disk and Partial-MDS array codes over GF(2^w) and GF(2)[x]/M_p(x).",
        epilog=FORMATS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, config=True):
        p = sub.add_parser(name, help=help_, epilog=FORMATS, formatter_class=argparse.RawDescriptionHelpFormatter)
        if config:
            p.add_argument("config", help="code config file (key=value lines)")
        p.set_defaults(func=func)
        return p

    p = add("field-info", cmd_field_info, "describe GF(2^w) or the ring mod M_p", config=False)
    p.add_argument("--w", type=int, help="field extension degree")
    p.add_argument("--modulus", help="field modulus as hex (default: least primitive polynomial)")
    p.add_argument("--p", type=int, help="describe GF(2)[x]/M_p instead")

    p = add("construct", cmd_construct, "dump the parity-check matrix")
    p.add_argument("-o", "--output")

    p = add("encode", cmd_encode, "encode a data file into an array file")
    p.add_argument("data", help="data file, r(n-m)-2 hex tokens")
    p.add_argument("-o", "--output")

    p = add("decode", cmd_decode, "repair erased cells of an array file")
    p.add_argument("array")
    p.add_argument("pattern", nargs="?", help="erasure pattern file (row:col pairs)")
    p.add_argument("--cols", help="erase whole columns, e.g. 0,3")
    p.add_argument("--cells", help='extra erased cells, e.g. "1:2 2:0"')
    p.add_argument("-o", "--output")

    p = add("verify", cmd_verify, "exhaustively check the SD or PMDS property")
    p.add_argument("--property", choices=["sd", "pmds"], required=True)
    p.add_argument("--jobs", type=int, default=1)

    add("lemma", cmd_lemma, "closed-form vs direct determinant sweep for the config's m, n, r")

    p = add("scenarios", cmd_scenarios, "five 4x5 failure scenarios under both codes (config: r=4 n=5 m=1)")
    p.add_argument("--seed", type=int, default=0)

    p = add("bench", cmd_bench, "time encode+decode over random stripes")
    p.add_argument("--stripes", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
