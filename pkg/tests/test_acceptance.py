"""Acceptance gate: one test (and one pass/fail line under -v) per criterion.

Run as `pytest -v tests/test_acceptance.py`; each criterion also prints a
CRITERION line visible with -s or on failure.
"""

import json
import os
import time
from fractions import Fraction
from math import comb

import pytest

from congrlab.arith import PrimeRange, rat_reduce_mod, sieve_primes, vp_rational
from congrlab.congruences import (
    CHECK_CATALOG,
    CheckResult,
    check_ids,
    evaluate_check,
    run_suite,
)
from congrlab.identities import RECURRENCES, check_recurrence, run_identity_suite
from congrlab.report import emit_report, exit_status
from congrlab.series import SERIES_CATALOG, evaluate_series, run_series_suite
from congrlab.special import (
    SpecialCache,
    bernoulli_exact,
    bernoulli_mod_p_fast,
    harmonic_exact,
)

JOBS = max(os.cpu_count() or 1, 1)


@pytest.fixture(scope="module")
def cache():
    c = SpecialCache()
    c.ensure_bernoulli(496)
    c.ensure_euler(496)
    return c


def _announce(n, detail):
    print(f"CRITERION {n}: PASS — {detail}")


def test_criterion_1_identity_suite_with_certificates():
    start = time.monotonic()
    cases = run_identity_suite(None, range(0, 201))
    assert cases and all(c.passed for c in cases)
    assert all(c.recurrence_residual == 0 for c in cases)
    for rec, (_, first) in RECURRENCES.items():
        for n in range(first, 201):
            assert check_recurrence(rec, n, side="rhs") == 0
    elapsed = time.monotonic() - start
    assert elapsed < 30, f"identity suite took {elapsed:.1f}s"
    _announce(1, f"{len(cases)} identity cases + 3 certificates to n=200 "
                 f"in {elapsed:.1f}s")


def test_criterion_2_proven_suite_7_to_499(cache):
    primes = sieve_primes(PrimeRange(7, 499))
    results, summary = run_suite(check_ids("proven"), primes, cache,
                                 padic_limit=0, jobs=JOBS)
    assert summary["failed"] == 0
    assert all(r.passed for r in results if r.applicable)
    _announce(2, f"{summary['passed']} proven (check, prime) pairs over "
                 f"{len(primes)} primes, 0 failures")


def test_criterion_3_path_agreement_up_to_61(cache):
    primes = sieve_primes(PrimeRange(3, 61))
    results, summary = run_suite(check_ids("all"), primes, cache,
                                 padic_limit=61, jobs=JOBS)
    assert summary["path_disagreements"] == 0
    ran_both = [r for r in results if r.path_agreement is not None]
    assert ran_both and all(r.path_agreement for r in ran_both)
    _announce(3, f"{len(ran_both)} dual-path evaluations, residues identical")


def test_criterion_4_special_number_cross_validation(cache):
    count = 0
    for p in sieve_primes(PrimeRange(5, 97)):
        for m in range(2, p - 2, 2):
            fast = bernoulli_mod_p_fast(m, p, cache).value
            assert fast == rat_reduce_mod(bernoulli_exact(m, cache), p, 1).value
            count += 1
    for n in range(2, 61, 2):
        den = 1
        for q in sieve_primes(PrimeRange(2, n + 1)):
            if n % (q - 1) == 0:
                den *= q
        assert bernoulli_exact(n, cache).denominator == den
    wolstenholme = sieve_primes(PrimeRange(5, 199))
    for p in wolstenholme:
        assert vp_rational(harmonic_exact(p - 1, 1), p) >= 2
    _announce(4, f"{count} power-sum/recurrence agreements, 30 exact "
                 f"denominators, {len(wolstenholme)} valuation bounds")


def test_criterion_5_conjecture_hunt_to_199(cache):
    primes = sieve_primes(PrimeRange(3, 199))
    results, summary = run_suite(check_ids("conjectural"), primes, cache,
                                 padic_limit=0, jobs=JOBS)
    assert summary["failed"] == 0, "counterexample found"
    assert all(r.status == "conjectural" for r in results)
    assert exit_status(results) == 0
    _announce(5, f"{summary['passed']} conjectural evaluations, "
                 f"0 counterexamples, exit status unaffected")


def test_criterion_6_numeric_anchor_at_7(cache):
    lhs = sum(Fraction((-1) ** k, k ** 3 * comb(2 * k, k)) for k in range(1, 4))
    rhs = -2 * bernoulli_exact(4, cache)
    assert lhs == Fraction(-1039, 2160) and rhs == Fraction(1, 15)
    assert rat_reduce_mod(lhs, 7, 1).value == 1
    assert rat_reduce_mod(rhs, 7, 1).value == 1
    result = evaluate_check("T1.1-1.1", 7, cache)
    assert result.passed and result.lhs == result.rhs == 1
    _announce(6, "both sides of the p=7 anchor reduce to 1 mod 7")


def test_criterion_7_series_sanity():
    reports = run_series_suite()
    assert len(reports) == len(SERIES_CATALOG) == 9
    for r in reports:
        assert r.converged, (r.name, r.error)
        assert r.terms <= 10 ** 5
    for name in ("S-ZETA2", "S-APERY3", "S-PI3", "S-PI2-10"):
        assert evaluate_series(name, terms=200, tol=1e-10).converged
    worst = max(r.error / r.tolerance for r in reports)
    _announce(7, f"nine series within tolerance (worst margin {worst:.2g}x)")


def test_criterion_8_determinism_and_exit_contract(cache):
    reports = []
    for _ in range(2):
        results, _ = run_suite(["T1.1-1.1", "T1.2-1.7"],
                               sieve_primes(PrimeRange(7, 31)), cache)
        reports.append(emit_report(results, "json", include_elapsed=False))
    assert reports[0] == reports[1]
    json.loads(reports[0])

    def fake(status, passed, agreement=None):
        return CheckResult("F", 7, 1, 0, 1, passed, status, True,
                           path_agreement=agreement)

    assert exit_status([fake("proven", False)]) == 1
    assert exit_status([fake("conjectural", False)]) == 0
    assert exit_status([fake("exploratory", False)]) == 0
    assert exit_status([fake("proven", True, agreement=False)]) == 1
    assert exit_status([fake("proven", True)]) == 0
    _announce(8, "byte-identical reports; exit 1 only on proven failure "
                 "or path disagreement")
