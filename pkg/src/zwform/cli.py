"""Command line front end.

Five subcommands: generate (tuple -> solution), decompose (solution ->
tuple), verify (check one solution), search (enumerate a box), roundtrip
(batch decompose + fuzz). Output is a stream of records, one per line, in
either a plain text or a JSON-lines format. Every integer is serialized as
a base-10 string, JSON included, so arbitrarily large values survive any
downstream JSON parser untouched.

Exit codes follow sysexits where it has an opinion:

    0   success
    1   internal error (a bug in this package, or a failed self-check)
    2   domain error (well-formed input outside the math's domain)
    64  usage error (malformed command line)
    74  output file could not be written
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .decomposition import decompose
from .errors import DegenerateE, NotCoprime, NotTheoremGrade, ZeroZ, ZwformError
from .exact_arith import gcd, is_prime
from .oracle import SearchBounds, identity_fuzz, roundtrip_check, stream_solutions
from .parametrization import ParameterTuple, Solution, generate

EX_OK = 0
EX_INTERNAL = 1
EX_DOMAIN = 2
EX_USAGE = 64
EX_IOERR = 74

# Every record lists its keys in this order, whatever subset it carries.
_KEY_ORDER = (
    "p", "x", "y", "z", "m", "w",
    "e", "f", "g", "l", "q", "n", "r",
    "a", "b", "c", "d", "h", "u",
    "error", "counts",
)

# argparse's stock matcher rejects values like -1..-1 and -1,0,2,1,1,1,0 as
# unknown options; anything starting with a minus and a digit is a value.
_NEGATIVE_VALUE = re.compile(r"^-\d")


class UsageError(Exception):
    """Malformed command line; mapped to exit code 64."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _record(kind: str, **fields) -> dict:
    rec = {"kind": kind}
    for key in _KEY_ORDER:
        if key in fields:
            value = fields[key]
            rec[key] = value if key in ("error", "counts") else str(value)
    return rec


def _tuple_record(t: ParameterTuple) -> dict:
    return _record("tuple", p=t.p, e=t.e, f=t.f, g=t.g, l=t.l, q=t.q, n=t.n, r=t.r)


def _solution_record(s: Solution) -> dict:
    return _record("solution", p=s.p, x=s.x, y=s.y, z=s.z, m=s.m, w=s.w)


def _trace_record(trace) -> dict:
    return _record(
        "trace",
        e=trace.e, f=trace.f, g=trace.g, l=trace.l, q=trace.q, n=trace.n, r=trace.r,
        a=trace.a, b=trace.b, c=trace.c, d=trace.d, h=trace.h, u=trace.u,
    )


def _str_counts(counts: dict) -> dict:
    return {key: str(value) for key, value in counts.items()}


def _emit(rec: dict, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(rec, separators=(",", ":")) + "\n")
        return
    if rec["kind"] == "error":
        stream.write(f"error {rec['error']}\n")
        return
    parts = [rec["kind"]]
    for key, value in rec.items():
        if key == "kind":
            continue
        if key == "counts":
            parts.extend(f"{ck}={cv}" for ck, cv in value.items())
        else:
            parts.append(f"{key}={value}")
    stream.write(" ".join(parts) + "\n")


def _fail(name: str, detail: str, fmt: str, code: int) -> int:
    _emit(_record("error", error=name), fmt, sys.stdout)
    print(f"error: {detail}", file=sys.stderr)
    return code


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise UsageError(f"--p must be prime, got {p}")


def _tuple_arg(text: str):
    parts = text.split(",")
    if len(parts) != 7:
        raise argparse.ArgumentTypeError("expected 7 comma-separated integers e,f,g,l,q,n,r")
    try:
        return tuple(int(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-integer component in {text!r}")


def _m_range_arg(text: str):
    lo_text, sep, hi_text = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}")
    try:
        return int(lo_text), int(hi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed m range {text!r}")


def _cmd_generate(args) -> int:
    _require_prime(args.p)
    fmt = args.format
    try:
        tup = ParameterTuple(args.p, *args.tuple)
    except ValueError as exc:
        return _fail("ValueError", str(exc), fmt, EX_DOMAIN)
    _emit(_tuple_record(tup), fmt, sys.stdout)
    try:
        sol = generate(tup)
    except (ZeroZ, NotCoprime) as exc:
        return _fail(type(exc).__name__, str(exc), fmt, EX_DOMAIN)
    _emit(_solution_record(sol), fmt, sys.stdout)
    return EX_OK


def _cmd_decompose(args) -> int:
    _require_prime(args.p)
    fmt = args.format
    p, x, y, z, m = args.p, args.x, args.y, args.z, args.m
    lhs = x ** p - m * y ** p
    if args.w is None:
        if z == 0:
            return _fail("NotTheoremGrade", "z must be nonzero", fmt, EX_DOMAIN)
        if lhs % z:
            return _fail("NotDivisible", f"z={z} does not divide x**p - m*y**p = {lhs}", fmt, EX_DOMAIN)
        w = lhs // z
    else:
        w = args.w
        if z * w != lhs:
            return _fail("InconsistentW", f"z*w = {z * w} but x**p - m*y**p = {lhs}", fmt, EX_DOMAIN)
    sol = Solution(p, x, y, z, m, w)
    try:
        tup, trace = decompose(sol)
    except (NotTheoremGrade, DegenerateE) as exc:
        return _fail(type(exc).__name__, str(exc), fmt, EX_DOMAIN)
    except ZwformError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EX_INTERNAL
    _emit(_solution_record(sol), fmt, sys.stdout)
    _emit(_tuple_record(tup), fmt, sys.stdout)
    if args.trace:
        _emit(_trace_record(trace), fmt, sys.stdout)
    return EX_OK


def _cmd_verify(args) -> int:
    _require_prime(args.p)
    sol = Solution(args.p, args.x, args.y, args.z, args.m, args.w)
    identity = sol.identity_holds()
    nonzero = all(v != 0 for v in (sol.x, sol.y, sol.z, sol.m, sol.w))
    coprime = (
        gcd(sol.x, sol.y) == 1 and gcd(sol.x, sol.z) == 1 and gcd(sol.y, sol.z) == 1
    )
    counts = {
        "identity": "1" if identity else "0",
        "nonzero": "1" if nonzero else "0",
        "pairwise_coprime": "1" if coprime else "0",
        "theorem_grade": "1" if identity and nonzero and coprime else "0",
    }
    _emit(_record("report", counts=counts), args.format, sys.stdout)
    return EX_OK if identity else EX_DOMAIN


def _search_bounds(args) -> SearchBounds:
    _require_prime(args.p)
    if args.bound < 1:
        raise UsageError(f"--bound must be >= 1, got {args.bound}")
    if args.jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
    m_lo, m_hi = args.m
    if m_lo > m_hi:
        raise UsageError(f"empty m range {m_lo}..{m_hi}")
    return SearchBounds(args.p, args.bound, m_lo, m_hi)


def _cmd_search(args) -> int:
    bounds = _search_bounds(args)
    fmt = args.format
    if args.out is not None:
        try:
            stream = open(args.out, "w", encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot open {args.out!r}: {exc}", file=sys.stderr)
            return EX_IOERR
    else:
        stream = sys.stdout
    try:
        stats = stream_solutions(
            bounds, lambda sol: _emit(_solution_record(sol), fmt, stream), jobs=args.jobs
        )
        _emit(_record("report", counts=_str_counts(stats.as_counts())), fmt, stream)
    finally:
        if stream is not sys.stdout:
            stream.close()
    return EX_OK


def _cmd_roundtrip(args) -> int:
    bounds = _search_bounds(args)
    if args.fuzz_count < 0:
        raise UsageError(f"--fuzz-count must be >= 0, got {args.fuzz_count}")
    report = roundtrip_check(bounds, jobs=args.jobs)
    fuzz = identity_fuzz(args.p, args.bound, args.fuzz_count, args.seed)
    counts = _str_counts(report.as_counts())
    counts.update({f"fuzz_{key}": value for key, value in _str_counts(fuzz.as_counts()).items()})
    _emit(_record("report", counts=counts), args.format, sys.stdout)
    if report.failures or fuzz.failures:
        for subject, why in (report.failures + fuzz.failures)[:20]:
            print(f"failure: {subject} ({why})", file=sys.stderr)
        return EX_INTERNAL
    return EX_OK


def _build_parser() -> _Parser:
    fmt_parent = _Parser(add_help=False)
    fmt_parent.add_argument("--format", choices=("text", "json"), default="text",
                            help="record format (default: text)")

    parser = _Parser(prog="zwform",
                     description="Generate, decompose, and audit integral solutions "
                                 "of x**p - m*y**p == z*w.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", parents=[fmt_parent],
                         help="evaluate the closed forms on one parameter tuple")
    gen.add_argument("--p", type=int, required=True, help="prime exponent")
    gen.add_argument("--tuple", type=_tuple_arg, required=True, metavar="E,F,G,L,Q,N,R")
    gen.set_defaults(handler=_cmd_generate)

    dec = sub.add_parser("decompose", parents=[fmt_parent],
                         help="recover a parameter tuple from one solution")
    dec.add_argument("--p", type=int, required=True)
    dec.add_argument("--x", type=int, required=True)
    dec.add_argument("--y", type=int, required=True)
    dec.add_argument("--z", type=int, required=True)
    dec.add_argument("--m", type=int, required=True)
    dec.add_argument("--w", type=int, default=None,
                     help="optional; recomputed from the identity when omitted")
    dec.add_argument("--trace", action="store_true", help="also print the Bezout trace")
    dec.set_defaults(handler=_cmd_decompose)

    ver = sub.add_parser("verify", parents=[fmt_parent],
                         help="check one solution against the identity and constraints")
    ver.add_argument("--p", type=int, required=True)
    ver.add_argument("--x", type=int, required=True)
    ver.add_argument("--y", type=int, required=True)
    ver.add_argument("--z", type=int, required=True)
    ver.add_argument("--m", type=int, required=True)
    ver.add_argument("--w", type=int, required=True)
    ver.set_defaults(handler=_cmd_verify)

    sea = sub.add_parser("search", parents=[fmt_parent],
                         help="enumerate all solutions in a box by brute force")
    sea.add_argument("--p", type=int, required=True)
    sea.add_argument("--bound", type=int, required=True, help="|x|, |y|, |z| <= bound")
    sea.add_argument("--m", type=_m_range_arg, required=True, metavar="LO..HI")
    sea.add_argument("--jobs", type=int, default=1, help="worker processes (default: 1)")
    sea.add_argument("--out", default=None, help="write records to this file instead of stdout")
    sea.set_defaults(handler=_cmd_search)

    rou = sub.add_parser("roundtrip", parents=[fmt_parent],
                         help="decompose every solution in a box and fuzz the identities")
    rou.add_argument("--p", type=int, required=True)
    rou.add_argument("--bound", type=int, required=True)
    rou.add_argument("--m", type=_m_range_arg, required=True, metavar="LO..HI")
    rou.add_argument("--jobs", type=int, default=1)
    rou.add_argument("--seed", type=int, default=0, help="fuzzing seed (default: 0)")
    rou.add_argument("--fuzz-count", type=int, default=1000,
                     help="random tuples to fuzz (default: 1000)")
    rou.set_defaults(handler=_cmd_roundtrip)

    for any_parser in (parser, fmt_parent, gen, dec, ver, sea, rou):
        any_parser._negative_number_matcher = _NEGATIVE_VALUE
    return parser


def run(argv=None) -> int:
    """Parse argv and execute; returns the process exit code."""
    try:
        args = _build_parser().parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EX_IOERR
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EX_INTERNAL


def main(argv=None) -> None:
    raise SystemExit(run(argv))
