"""Command-line front end: verify / identity / series / bernoulli."""

from __future__ import annotations

import argparse
import os
import sys

from .arith import PrimeRange, sieve_primes
from .congruences import (
    DEFAULT_SLACK,
    PADIC_PATH_MAX_PRIME,
    check_ids,
    run_suite,
)
from .errors import CongrlabError
from .identities import IDENTITY_CATALOG, run_identity_suite
from .report import emit_report, exit_status
from .series import SERIES_CATALOG, run_series_suite
from .special import SpecialCache, bernoulli_exact

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        lo = hi = text
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected lo:hi")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="congrlab",
        description="Exact verification of the p-adic congruence and identity "
                    "catalog for central binomial coefficient sums.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(sp):
        sp.add_argument("--format", choices=["json", "csv", "md"], default="json")
        sp.add_argument("--out", metavar="PATH", default=None,
                        help="write the report here instead of stdout")
        sp.add_argument("--cache", metavar="PATH",
                        default=os.environ.get("CONGRLAB_CACHE"),
                        help="Bernoulli/Euler cache file (env CONGRLAB_CACHE)")

    sp = sub.add_parser("verify", help="run congruence checks over a prime range")
    common(sp)
    sp.add_argument("--primes", type=_parse_range, default=(7, 499),
                    metavar="LO:HI")
    sp.add_argument("--checks", default="proven",
                    help="comma list of ids, or all/proven/conjectural/exploratory")
    sp.add_argument("--slack", type=int, default=DEFAULT_SLACK,
                    help="extra working p-adic digits")
    sp.add_argument("--padic-limit", type=int, default=PADIC_PATH_MAX_PRIME,
                    help="run the p-adic second path for primes up to this")
    sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("identity", help="verify exact identities")
    common(sp)
    sp.add_argument("--names", default="all",
                    help="comma list of identity names, or all")
    sp.add_argument("--n", type=_parse_range, default=(1, 50), metavar="LO:HI")

    sp = sub.add_parser("series", help="floating sanity checks of the series")
    common(sp)
    sp.add_argument("--names", default="all")
    sp.add_argument("--terms", type=int, default=None)
    sp.add_argument("--tol", type=float, default=None)

    sp = sub.add_parser("bernoulli", help="print/extend the special-number cache")
    common(sp)
    sp.add_argument("--max", type=int, default=30, dest="max_index")

    return parser


def parse_and_run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    try:
        cache = SpecialCache.load(args.cache) if args.cache else SpecialCache()

        if args.subcommand == "verify":
            ids = check_ids(args.checks)
            primes = sieve_primes(PrimeRange(*args.primes))
            results, _ = run_suite(ids, primes, cache, slack=args.slack,
                                   padic_limit=args.padic_limit, jobs=args.jobs)
            status = exit_status(results)
        elif args.subcommand == "identity":
            names = (None if args.names == "all"
                     else [s.strip() for s in args.names.split(",") if s.strip()])
            lo, hi = args.n
            results = run_identity_suite(names, range(lo, hi + 1))
            status = exit_status(results)
        elif args.subcommand == "series":
            names = (None if args.names == "all"
                     else [s.strip() for s in args.names.split(",") if s.strip()])
            results = run_series_suite(names, args.terms, args.tol)
            status = exit_status(results)
        else:  # bernoulli
            cache.ensure_bernoulli(args.max_index)
            cache.ensure_euler(args.max_index)
            lines = [f"B_{n} = {bernoulli_exact(n, cache)}"
                     for n in range(0, args.max_index + 1, 2)]
            text = "\n".join(lines) + "\n"
            if args.cache:
                cache.save(args.cache)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK

        report = emit_report(results, args.format)
        if args.cache:
            cache.save(args.cache)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(report)
        else:
            sys.stdout.write(report + "\n")
        return status

    except (CongrlabError, ValueError, OSError) as exc:
        print(f"congrlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(parse_and_run())


if __name__ == "__main__":
    main()
