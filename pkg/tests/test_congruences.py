"""Congruence catalog evaluation: frozen anchors, applicability, two-path
agreement, equivalence chains, valuation guarantees and suite determinism."""

from fractions import Fraction
from math import comb

import pytest

from congrlab.arith import PrimeRange, rat_reduce_mod, sieve_primes, vp_rational
from congrlab.congruences import (
    CHECK_CATALOG,
    check_ids,
    evaluate_check,
    run_suite,
)
from congrlab.errors import UnknownCheck
from congrlab.report import exit_status
from congrlab.special import SpecialCache, bernoulli_exact


@pytest.fixture(scope="module")
def cache():
    c = SpecialCache()
    c.ensure_bernoulli(200)
    c.ensure_euler(100)
    return c


# -- frozen anchors -----------------------------------------------------------


def test_anchor_alternating_inverse_sum_at_7(cache):
    """At p = 7 both sides reduce to 1 mod 7; the exact left side is the
    three-term rational -1/2 + 1/48 - 1/540 = -1039/2160."""
    lhs = sum(Fraction((-1) ** k, k ** 3 * comb(2 * k, k)) for k in range(1, 4))
    assert lhs == Fraction(-1039, 2160)
    rhs = -2 * bernoulli_exact(4, cache)
    assert rhs == Fraction(1, 15)
    assert rat_reduce_mod(lhs, 7, 1).value == rat_reduce_mod(rhs, 7, 1).value == 1

    result = evaluate_check("T1.1-1.1", 7, cache)
    assert result.passed and result.lhs == result.rhs == 1


def test_central_sum_mod_p3_at_7(cache):
    result = evaluate_check("T1.2-1.7", 7, cache)
    assert result.passed and result.m == 3
    assert result.lhs == result.rhs


def test_harmonic_bernoulli_link_at_5(cache):
    """H_2 - C(4,2)^2/16^2... family anchor: the mod-p^4 statement at p = 5,
    with the defect -18125/72 divisible by 5^4."""
    result = evaluate_check("L2.2-2.3", 5, cache)
    assert result.passed and result.m == 4
    defect = Fraction(6) - 256 - Fraction(125, 12) * bernoulli_exact(2, cache)
    assert defect == Fraction(-18125, 72)
    assert vp_rational(defect, 5) >= 4


def test_inapplicable_prime_is_not_a_failure(cache):
    result = evaluate_check("T1.1-1.1", 5, cache)
    assert not result.applicable
    assert result.passed is None and result.lhs is None
    assert "inapplicable" in result.note
    assert exit_status([result]) == 0


def test_unknown_check_rejected(cache):
    with pytest.raises(UnknownCheck):
        evaluate_check("NO_SUCH", 7, cache)
    with pytest.raises(UnknownCheck):
        run_suite(["NO_SUCH"], [7], cache)
    with pytest.raises(UnknownCheck):
        check_ids("T1.1-1.1,NO_SUCH")


# -- selectors and catalog hygiene ----------------------------------------------


def test_check_id_selectors():
    assert check_ids("all") == list(CHECK_CATALOG)
    proven = check_ids("proven")
    conjectural = check_ids("conjectural")
    exploratory = check_ids("exploratory")
    assert set(proven) | set(conjectural) | set(exploratory) == set(CHECK_CATALOG)
    assert not set(proven) & set(conjectural)
    assert check_ids(" T1.1-1.1 , T1.2-1.7 ") == ["T1.1-1.1", "T1.2-1.7"]


def test_catalog_metadata_sane():
    for spec in CHECK_CATALOG.values():
        assert spec.m >= 1
        assert spec.min_prime in (3, 5, 7)
        assert spec.status in ("proven", "conjectural", "exploratory")
        assert spec.shift >= 0


# -- proven checks, small primes ---------------------------------------------------


def test_all_proven_checks_pass_up_to_97(cache):
    primes = sieve_primes(PrimeRange(5, 97))
    results, summary = run_suite(check_ids("proven"), primes, cache, padic_limit=0)
    assert summary["failed"] == 0
    assert all(r.passed for r in results if r.applicable)


def test_conjectural_checks_pass_small_range(cache):
    primes = sieve_primes(PrimeRange(3, 61))
    results, summary = run_suite(check_ids("conjectural"), primes, cache,
                                 padic_limit=0)
    assert summary["failed"] == 0
    assert all(r.status == "conjectural" for r in results)
    assert exit_status(results) == 0


def test_exploratory_variants_fail_without_breaking_the_run(cache):
    """The literal fourth-line binomial reading is reported, never asserted."""
    for p in (3, 5, 7, 11):
        result = evaluate_check("CJ1.2-d-lit", p, cache)
        assert result.status == "exploratory"
        assert result.passed is False
        assert exit_status([result]) == 0


# -- two evaluation paths -------------------------------------------------------------


def test_path_agreement_small_primes(cache):
    for p in (3, 5, 7, 11, 13):
        for check_id in CHECK_CATALOG:
            result = evaluate_check(check_id, p, cache, with_padic=True)
            if result.applicable:
                assert result.path_agreement is not False, (check_id, p)


def test_padic_path_disabled_above_limit(cache):
    result = evaluate_check("T1.2-1.7", 67, cache)  # default limit is 61
    assert result.passed and result.path_agreement is None
    result = evaluate_check("T1.2-1.7", 61, cache)
    assert result.passed and result.path_agreement is True


# -- structural invariants ----------------------------------------------------------


def test_equivalence_chain(cache):
    """The mod-p and shifted mod-p^3 forms of the alternating central sums
    stand or fall together at every prime."""
    chain = ["T1.1-1.1", "T1.1-1.2", "T1.1-1.4a", "T1.1-1.4b"]
    for p in sieve_primes(PrimeRange(7, 61)):
        outcomes = {i: evaluate_check(i, p, cache).passed for i in chain}
        assert len(set(outcomes.values())) == 1, (p, outcomes)


def test_upper_half_central_square_sum_valuation(cache):
    """v_p of the upper-half sum of C(2k,k)^2/(k 16^k) is >= 2, the guarantee
    consumed before every /p^2 shift."""
    for p in sieve_primes(PrimeRange(7, 97)):
        total = sum(Fraction(comb(2 * k, k) ** 2, k * 16 ** k)
                    for k in range((p + 1) // 2, p))
        assert vp_rational(total, p) >= 2


# -- suite orchestration ---------------------------------------------------------------


def test_run_suite_deterministic_order(cache):
    ids = ["T1.2-1.7", "T1.1-1.1", "L2.2-2.3"]
    primes = [13, 7, 11]
    res1, _ = run_suite(ids, primes, cache, padic_limit=0)
    res2, _ = run_suite(list(reversed(ids)), sorted(primes), cache, padic_limit=0)
    key = lambda r: (r.id, r.p, r.lhs, r.rhs, r.passed, r.applicable)
    assert [key(r) for r in res1] == [key(r) for r in res2]
    assert [(r.id, r.p) for r in res1] == sorted((r.id, r.p) for r in res1)


def test_run_suite_parallel_matches_serial(cache):
    ids = check_ids("proven")[:8]
    primes = sieve_primes(PrimeRange(7, 31))
    serial, _ = run_suite(ids, primes, cache, padic_limit=0, jobs=1)
    parallel, _ = run_suite(ids, primes, cache, padic_limit=0, jobs=2)
    key = lambda r: (r.id, r.p, r.lhs, r.rhs, r.passed, r.applicable)
    assert [key(r) for r in serial] == [key(r) for r in parallel]


def test_summary_counts(cache):
    results, summary = run_suite(["T1.1-1.1", "CJ1.2-d-lit"], [5, 7], cache,
                                 padic_limit=0)
    assert summary["total"] == 4
    assert summary["inapplicable"] == 1  # T1.1-1.1 at p = 5
    assert summary["by_status"]["proven"]["passed"] == 1
    assert summary["by_status"]["exploratory"]["failed"] == 2
