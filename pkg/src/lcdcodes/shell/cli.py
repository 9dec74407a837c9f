"""Command-line driver.

Exit codes: 0 ok, 2 parse/usage error, 3 construction impossible,
4 budget exceeded, 5 verification failed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .. import bounds
from ..codecore import (
    DEFAULT_DISTANCE_BUDGET,
    EUCLIDEAN,
    HERMITIAN,
    hull_dimension,
    is_lcd,
    min_distance,
)
from ..errors import (
    BudgetExceeded,
    FieldTooSmall,
    InvalidParameters,
    OutOfDomain,
    ParseError,
    VerificationFailed,
)
from ..galois import field_of_order
from ..lcdforge import DEFAULT_SEARCH_BUDGET, extend_to_lcd, lcdify
from ..matfq import rank
from .formats import (
    format_code,
    format_record,
    parse_code,
    parse_record,
    record_from_extension,
    record_from_lcdify,
)
from .rng import random_code
from .verify import verify

EXIT_OK, EXIT_PARSE, EXIT_IMPOSSIBLE, EXIT_BUDGET, EXIT_VERIFY = 0, 2, 3, 4, 5


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def _load_code(path: str, reduce: bool = False):
    try:
        return parse_code(_read(path), reduce=reduce)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_analyze(args) -> int:
    C = _load_code(args.file, args.reduce)
    gram = C.gram()
    verdict = is_lcd(C)
    print(f"field: F_{C.q} ({C.field.header()[len('field '):]})")
    print(f"form: {C.variant}")
    print(f"n={C.n} k={C.k} rank_gram={rank(gram)}")
    print(f"h={hull_dimension(C)}, LCD={'yes' if verdict else 'no'}, det={verdict.det.value}")
    if args.mindist:
        d = min_distance(C, args.budget)
        defect = bounds.singleton_defect(C.n, C.k, d)
        print(f"d={d} singleton_defect={defect} MDS={'yes' if defect == 0 else 'no'}")
    return EXIT_OK


def cmd_lcdify(args) -> int:
    C = _load_code(args.file, args.reduce)
    try:
        res = lcdify(C, allow_zero=args.allow_zero, budget=args.search_budget)
    except FieldTooSmall as exc:
        need = "q > 3 (Euclidean)" if C.variant == EUCLIDEAN else "F_{Q^2} with Q > 2 (Hermitian)"
        print(
            f"lcdify: construction impossible: {exc}. Equivalence to an LCD code is only "
            f"guaranteed for {need}; --allow-zero gives a degenerate LCD code instead.",
            file=sys.stderr,
        )
        return EXIT_IMPOSSIBLE
    _emit(format_code(res.code), args.output)
    if args.cert:
        Path(args.cert).write_text(format_record(record_from_lcdify(res)))
    J = " ".join(str(j + 1) for j in res.J) or "(empty)"
    print(f"lcdify: J={J} det_gram_after={res.det_gram_after.value}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    original = _load_code(args.original)
    transformed = _load_code(args.transformed)
    try:
        rec = parse_record(_read(args.cert))
    except ParseError as exc:
        raise ParseError(f"{args.cert}: {exc}") from None
    try:
        report = verify(original, transformed, rec)
    except VerificationFailed as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return EXIT_VERIFY
    print(f"PASS {report.kind}: {', '.join(report.checks)}")
    return EXIT_OK


def cmd_extend(args) -> int:
    C = _load_code(args.file, args.reduce)
    C_L, E = extend_to_lcd(C)
    _emit(format_code(C_L), args.output)
    if args.cert:
        Path(args.cert).write_text(format_record(record_from_extension(C, C_L, E)))
    print(f"extend: h={E.h} -> [{C_L.n},{C_L.k}]", file=sys.stderr)
    return EXIT_OK


def cmd_random(args) -> int:
    try:
        F = field_of_order(args.q)
    except Exception as exc:
        raise ParseError(f"--q {args.q}: {exc}") from None
    if not 1 <= args.k <= args.n:
        raise ParseError(f"need 1 <= k <= n, got k={args.k} n={args.n}")
    if args.form == HERMITIAN and F.m % 2:
        raise ParseError(f"--form hermitian needs a square field order, got {args.q}")
    C = random_code(F, args.n, args.k, args.seed, args.form)
    _emit(format_code(C), args.output)
    return EXIT_OK


def cmd_mindist(args) -> int:
    C = _load_code(args.file, args.reduce)
    d = min_distance(C, args.budget)
    print(f"d={d}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.delta is None and args.n is None:
        raise ParseError("give --delta, or --n --k --d")
    if args.delta is not None:
        h = bounds.entropy(args.q, args.delta)
        r = bounds.gv_rate(args.q, args.delta)
        print(f"q={args.q} delta={args.delta!r} H_q={h!r} R_GV={r!r}")
    if args.n is not None:
        if args.k is None or args.d is None:
            raise ParseError("--n needs --k and --d")
        defect = bounds.singleton_defect(args.n, args.k, args.d)
        print(f"n={args.n} k={args.k} d={args.d} singleton_defect={defect} MDS={'yes' if defect == 0 else 'no'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lcdcodes", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def code_cmd(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file")
        p.add_argument("--reduce", action="store_true", help="drop dependent generator rows")
        p.set_defaults(func=func)
        return p

    p = code_cmd("analyze", cmd_analyze, "hull dimension and LCD verdict")
    p.add_argument("--mindist", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_DISTANCE_BUDGET)

    p = code_cmd("lcdify", cmd_lcdify, "equivalent LCD code by column scaling")
    p.add_argument("--allow-zero", action="store_true", help="permit zero scalars (degenerate)")
    p.add_argument("-o", "--output")
    p.add_argument("--cert")
    p.add_argument("--search-budget", type=int, default=DEFAULT_SEARCH_BUDGET)

    p = sub.add_parser("verify", help="recheck an lcdify/extend certificate")
    p.add_argument("original")
    p.add_argument("transformed")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)

    p = code_cmd("extend", cmd_extend, "[n+h, k, >=d] LCD extension")
    p.add_argument("-o", "--output")
    p.add_argument("--cert")

    p = sub.add_parser("random", help="seeded random code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--form", choices=(EUCLIDEAN, HERMITIAN), default=EUCLIDEAN)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_random)

    p = code_cmd("mindist", cmd_mindist, "exact minimum distance")
    p.add_argument("--budget", type=int, default=DEFAULT_DISTANCE_BUDGET)

    p = sub.add_parser("bounds", help="entropy / GV rate / Singleton defect")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--delta", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_bounds)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"{args.command}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OutOfDomain, InvalidParameters) as exc:
        print(f"{args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"{args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
