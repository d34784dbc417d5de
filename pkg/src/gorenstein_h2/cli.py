"""Command-line entry point.

Exit codes: 0 success, 1 computational failure (unreadable form file, FAIL
in ``reproduce``), 2 usage error (bad arguments or out-of-range values).
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .apolarity import DEFAULT_PRIME, RATIONAL, FormParseError, format_form, hilbert_of_form, read_form, search_form
from .binomial import eval_shift, expand
from .bounds import bound_reports, gorenstein_necessary, lower_bound, table_csv
from .constructions import (asymptotic_csv, asymptotic_table, geometric_range, lemma11_decompose,
                            lift_hvector, trivial_extension, upper_bound_h2)
from .linalg import check_prime
from .osequence import HVector

PROG = "gorenstein-h2"
PRIME_ENV = "GORENSTEIN_H2_PRIME"


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
        if value < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {value}")
        return value
    parse.__name__ = f"int>={lo}"
    return parse


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None


def _hvec(text: str) -> HVector:
    try:
        return HVector.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _prime(text: str) -> int:
    p = _integer(text)
    if p == RATIONAL:
        return p
    try:
        return check_prime(p)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _default_prime() -> int:
    raw = os.environ.get(PRIME_ENV)
    return DEFAULT_PRIME if raw is None else _prime(raw)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # one line on stderr; --help still shows full usage
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog=PROG, description="Bounds on the degree-two entry of Gorenstein h-vectors.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("expand", help="i-binomial expansion of n")
    s.add_argument("n", type=_int_at_least(0))
    s.add_argument("i", type=_int_at_least(1))

    s = sub.add_parser("shift", help="shifted sum (n_(i))_a^b")
    s.add_argument("n", type=_int_at_least(0))
    s.add_argument("i", type=_int_at_least(1))
    s.add_argument("a", type=_integer)
    s.add_argument("b", type=_integer)

    s = sub.add_parser("lower", help="lower bound on h_2 at codimension r, socle degree e")
    s.add_argument("r", type=_int_at_least(2))
    s.add_argument("e", type=_int_at_least(4))

    s = sub.add_parser("upper", help="constructive upper bound on h_2 for socle degree 4")
    s.add_argument("r", type=_int_at_least(4))

    s = sub.add_parser("decompose", help="r = m + C(m+1,3) + C(a+1,2) + b")
    s.add_argument("r", type=_int_at_least(4))

    s = sub.add_parser("table", help="CSV of lower bounds for r = 2..rmax")
    s.add_argument("--e", type=_int_at_least(4), required=True)
    s.add_argument("--rmax", type=_int_at_least(2), required=True)

    s = sub.add_parser("trivialext", help="trivial extension of a level h-vector")
    s.add_argument("h", type=_hvec)

    s = sub.add_parser("lift", help="add one to every interior entry of a Gorenstein h-vector")
    s.add_argument("h", type=_hvec)

    s = sub.add_parser(
        "feasible",
        help="decomposition filter (necessary conditions only)",
        description="Search for h = b + c with c under Green's bound and b recursively "
                    "of the same kind.  Infeasible proves h is not Gorenstein; feasible proves "
                    "nothing.  Cost grows exponentially with socle degree and depth.")
    s.add_argument("h", type=_hvec)
    s.add_argument("--max-depth", type=_int_at_least(1), default=None,
                   help="recursion depth on the Gorenstein part (default: socle degree)")

    s = sub.add_parser("asymptotics", help="CSV of lower/upper ratios against (6r)^(2/3)")
    s.add_argument("--rmin", type=_int_at_least(4), required=True)
    s.add_argument("--rmax", type=_int_at_least(4), required=True)
    step = s.add_mutually_exclusive_group(required=True)
    step.add_argument("--step", type=_int_at_least(1))
    step.add_argument("--geometric", type=_int_at_least(2), metavar="FACTOR")
    s.add_argument("--out", help="write CSV here instead of stdout")

    ap = sub.add_parser("apolar", help="inverse-system computations on explicit forms")
    asub = ap.add_subparsers(dest="apolar_command", required=True, metavar="ACTION")
    s = asub.add_parser("hilbert", help="h-vector of R/Ann(F) for a form file")
    s.add_argument("--form", required=True)
    s = asub.add_parser("search", help="seeded search for a form with a target h-vector")
    s.add_argument("--target", type=_hvec, required=True)
    s.add_argument("--trials", type=_int_at_least(0), default=100)
    s.add_argument("--prime", type=_prime, default=None,
                   help=f"field characteristic, 0 for rationals (default ${PRIME_ENV} or {DEFAULT_PRIME})")
    s.add_argument("--seed", type=_integer, default=0)
    s.add_argument("--workers", type=_int_at_least(1), default=1)
    s.add_argument("--out", help="write the witness form here")

    sub.add_parser("reproduce", help="check every reference value; PASS/FAIL per line")
    return p


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "expand":
        print(expand(args.n, args.i))
    elif cmd == "shift":
        print(eval_shift(expand(args.n, args.i), (args.a, args.b)))
    elif cmd == "lower":
        print(lower_bound(args.r, args.e))
    elif cmd == "upper":
        up = upper_bound_h2(args.r)
        print(f"upper={up.value} certificate={up.certificate}")
    elif cmd == "decompose":
        m, a, b = lemma11_decompose(args.r)
        print(f"m={m} a={a} b={b}")
    elif cmd == "table":
        sys.stdout.write(table_csv(bound_reports(args.e, args.rmax)))
    elif cmd == "trivialext":
        print(trivial_extension(args.h))
    elif cmd == "lift":
        print(lift_hvector(args.h))
    elif cmd == "feasible":
        verdict = gorenstein_necessary(args.h, args.max_depth)
        if verdict.feasible:
            w = verdict.witness
            print(f"feasible b={w.gorenstein_part} c={w.c}")
        else:
            print("infeasible")
    elif cmd == "asymptotics":
        if args.rmax < args.rmin:
            raise ValueError(f"--rmax {args.rmax} is below --rmin {args.rmin}")
        if args.step is not None:
            rs = list(range(args.rmin, args.rmax + 1, args.step))
        else:
            rs = geometric_range(args.rmin, args.rmax, args.geometric)
        _emit(asymptotic_csv(asymptotic_table(rs)), args.out)
    elif cmd == "apolar":
        if args.apolar_command == "hilbert":
            print(hilbert_of_form(read_form(args.form)))
        else:
            prime = args.prime if args.prime is not None else _default_prime()
            F = search_form(args.target, args.trials, prime, args.seed, args.workers)
            if F is None:
                print(f"none found in {args.trials} random trials (not a proof of non-existence)")
            else:
                _emit(format_form(F), args.out)
                if args.out:
                    print(f"witness written to {args.out}")
    elif cmd == "reproduce":
        from .reproduce import run
        failed = 0
        for name, ok in run():
            print(f"{'PASS' if ok else 'FAIL'} {name}")
            failed += not ok
        return 1 if failed else 0
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except (FormParseError, OSError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    except argparse.ArgumentTypeError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
