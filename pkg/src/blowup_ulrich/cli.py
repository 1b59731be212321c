"""Command line front end.

    blowup-ulrich verify --n 7 --m 4 --class "(6;2^6,1)"
    blowup-ulrich families --n 7 --m 4 --json
    blowup-ulrich classify --n 10 --m 4 --json
    blowup-ulrich higher-rank --n 2 --m 3 --rmax 4
    blowup-ulrich oracle --class "(4;2,1^3,0^3)" --seed 1

Exit status: 0 when everything printed is decided, 2 when an Undecided
verdict appears, 1 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .classify import ClassificationError, SearchCaps, classify
from .families import FamilyError, boundary_candidates, delta_k, family_class, theorem_family
from .higher_rank import PROFILE_COLUMNS, HigherRankError, wildness_table
from .interpolation import DEFAULT_PRIME, OracleError, h0_interpolation
from .lattice import LatticeError, parse_class, polarization
from .ulrich import Outcome, VerificationError, verify

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNDECIDED = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for Undecided here
    def error(self, message: str) -> None:
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _require(args, *names: str) -> None:
    flags = {"cls": "class"}
    missing = [f"--{flags.get(n, n)}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.verb} needs {', '.join(missing)}\n")


def _polarization(args):
    pol = polarization(args.n, args.m, args.allow_conjectural_very_ample)
    if not pol.very_ample:
        raise UsageError(f"{pol} is not known to be very ample "
                         "(try --allow-conjectural-very-ample)\n")
    return pol


def cmd_verify(args, out) -> int:
    _require(args, "n", "m", "cls")
    verdict = verify(parse_class(args.cls), _polarization(args))
    if args.json:
        out.write(_dump(verdict.as_dict()) + "\n")
    else:
        out.write(f"class      {verdict.cls}\n")
        out.write(f"polarized  {verdict.pol} ({verdict.pol.criterion_used.value})\n")
        for key in ("cond_i", "cond_ii", "cond_iii", "cond_iv"):
            value = getattr(verdict, key)
            rule = verdict.rules.get(key, "")
            out.write(f"{key:<10} {'-' if value is None else value}  {rule}\n")
        smooth = verdict.smoothness
        out.write(f"smoothness {'-' if smooth is None else smooth.status.value}\n")
        out.write(f"overall    {verdict.label}\n")
    return EXIT_UNDECIDED if verdict.overall is Outcome.UNDECIDED else EXIT_OK


def cmd_families(args, out) -> int:
    _require(args, "n", "m")
    if args.d is not None:
        delta, k = delta_k(args.n, args.m, args.d)
        records = [r for r in theorem_family(args.n, args.m) + boundary_candidates(args.n, args.m)
                   if r.d == args.d]
        if not records:
            raise FamilyError(f"d = {args.d} is outside the window for ({args.n}, {args.m}) "
                              f"[{family_class(args.n, args.d, delta, k)}]")
    else:
        records = theorem_family(args.n, args.m)
        if (args.n, args.m) != (2, 3):
            records += boundary_candidates(args.n, args.m)
    if args.json:
        for rec in records:
            out.write(json.dumps(rec.as_dict(), sort_keys=True) + "\n")
    else:
        out.write(f"{'d':>4} {'delta':>6} {'k':>5} {'orbit':>10}  class\n")
        for rec in records:
            tag = "  (boundary)" if rec.boundary else ""
            out.write(f"{rec.d:>4} {rec.delta:>6} {rec.k:>5} {rec.orbit_size:>10}  {rec.cls}{tag}\n")
    return EXIT_OK


def cmd_classify(args, out) -> int:
    _require(args, "n", "m")
    caps = SearchCaps(d_max=args.d, mult_max=args.caps_mult_max)
    report = classify(args.n, _polarization(args), caps)
    if args.json:
        out.write(_dump(report.as_dict()) + "\n")
    else:
        out.write(f"X_{report.n}, m = {report.m}, caps {report.caps}\n")
        out.write("Ulrich:\n")
        whitelisted = {c: why for c, why in report.whitelisted}
        for c in report.ulrich:
            note = f"  [whitelist: {whitelisted[c]}]" if c in whitelisted else ""
            out.write(f"  {c}{note}\n")
        out.write("near misses:\n")
        for c, failed in report.near_misses:
            out.write(f"  {c}  fails ({failed})\n")
        if report.undecided:
            out.write("undecided:\n")
            for c, why in report.undecided:
                out.write(f"  {c}  ({why})\n")
        for t in report.truncations:
            out.write(f"warning: caps truncate degree {t.d} (natural bound {t.natural_bound})\n")
    return EXIT_UNDECIDED if report.undecided else EXIT_OK


def cmd_higher_rank(args, out) -> int:
    _require(args, "n", "m", "rmax")
    rows = [p.as_dict() for p in wildness_table(args.n, args.m, args.rmax,
                                                args.allow_conjectural_very_ample)]
    if args.json:
        out.write(_dump(rows) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=PROFILE_COLUMNS + ["note"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    _require(args, "cls", "seed")
    c = parse_class(args.cls)
    if args.n is not None and args.n != c.n:
        raise UsageError(f"--n {args.n} but the class has {c.n} points\n")
    value = h0_interpolation(c, prime=args.prime, trials=args.trials, seed=args.seed)
    if args.json:
        out.write(_dump({"class": str(c.canonical()), "h0": value, "prime": args.prime,
                         "trials": args.trials, "seed": args.seed}) + "\n")
    else:
        out.write(f"h0{c.canonical()} = {value}  (p = {args.prime}, {args.trials} trials, "
                  f"seed {args.seed})\n")
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "families": cmd_families,
    "classify": cmd_classify,
    "higher-rank": cmd_higher_rank,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="blowup-ulrich",
                description="Ulrich line bundles on the plane blown up at general points.")
    p.add_argument("verb", choices=sorted(COMMANDS))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--class", dest="cls", help='divisor class, e.g. "(6;2^6,1)"')
    p.add_argument("--d", type=int, help="degree (families) or degree cap (classify)")
    p.add_argument("--rmax", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--caps-mult-max", type=int)
    p.add_argument("--allow-conjectural-very-ample", action="store_true")
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        err.write(str(exc))
        if "usage:" not in str(exc):
            err.write(parser.format_usage())
        return EXIT_INPUT
    except (LatticeError, VerificationError, FamilyError, ClassificationError,
            HigherRankError, OracleError) as exc:
        err.write(f"error: {exc}\n")
        err.write(parser.format_usage())
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
