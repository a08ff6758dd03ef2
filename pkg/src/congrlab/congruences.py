"""Declarative catalog of the p-adic congruences and a two-path evaluator.

Every check is evaluated once over exact rationals (ground truth) and,
for small primes, once over valuation-aware truncated p-adics; the two
residues must coincide.  A disagreement is an engine bug, not a failing
congruence, and is surfaced as such.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import PAdic, binomial_big, rat_reduce_mod, vp_rational
from .errors import (
    CongrlabError,
    NegativeValuation,
    UnknownCheck,
    ValuationViolation,
)
from .special import SpecialCache, bernoulli_exact, euler_exact, harmonic_prefix

DEFAULT_SLACK = 4
PADIC_PATH_MAX_PRIME = 61


# -- evaluation contexts -------------------------------------------------


class ExactContext:
    """Evaluates expressions over exact rationals."""

    def __init__(self, p: int, cache: SpecialCache):
        self.p = p
        self.n = (p - 1) // 2
        self.cache = cache
        self._harmonic: dict[int, list[Fraction]] = {}

    def frac(self, a, b=1):
        return self._lift(Fraction(a, b))

    def _lift(self, r: Fraction):
        return r

    def binom(self, n: int, k: int):
        return self._lift(Fraction(binomial_big(n, k)))

    def H(self, i: int, m: int = 1):
        table = self._harmonic.get(m)
        if table is None or len(table) <= i:
            self._harmonic[m] = table = harmonic_prefix(self.p + 1, m)
        return self._lift(table[i])

    def bern(self, i: int):
        return self._lift(bernoulli_exact(i, self.cache))

    def euler_num(self, i: int):
        return self._lift(Fraction(euler_exact(i, self.cache)))

    def qp(self):
        """Fermat quotient q_p(2) as an exact integer."""
        return self._lift(Fraction(pow(2, self.p - 1) - 1, self.p))

    def div_pp(self, x, s: int):
        """Divide by p^s after asserting the guaranteed valuation."""
        if x != 0 and vp_rational(x, self.p) < s:
            raise ValuationViolation(
                f"p={self.p}: expected valuation >= {s}, got {vp_rational(x, self.p)}")
        return x / Fraction(self.p ** s)

    def residue(self, x, e: int) -> int:
        try:
            return rat_reduce_mod(x, self.p, e).value
        except NegativeValuation as exc:
            raise ValuationViolation(str(exc)) from exc


class PadicContext(ExactContext):
    """Evaluates the same expressions over truncated p-adic numbers."""

    def __init__(self, p: int, cache: SpecialCache, prec: int):
        super().__init__(p, cache)
        self.prec = prec

    def _lift(self, r: Fraction):
        return PAdic.from_rational(r, self.p, self.prec)

    def div_pp(self, x, s: int):
        if not x.is_zero_marker and x.val < s:
            raise ValuationViolation(
                f"p={self.p}: expected valuation >= {s}, got {x.val}")
        return x.shift(s)

    def residue(self, x, e: int) -> int:
        try:
            return x.residue(e).value
        except NegativeValuation as exc:
            raise ValuationViolation(str(exc)) from exc


# -- check specifications -------------------------------------------------


@dataclass(frozen=True)
class CheckSpec:
    id: str
    description: str
    m: int                      # modulus exponent
    min_prime: int
    status: str                 # proven | conjectural | exploratory
    pairs: callable             # ctx -> [(label, lhs_value, rhs_value)]
    shift: int = 0              # extra working precision for explicit 1/p^s
    note: str = ""


@dataclass
class CheckResult:
    id: str
    p: int
    m: int
    lhs: int | None
    rhs: int | None
    passed: bool | None
    status: str
    applicable: bool
    path_agreement: bool | None = None
    elapsed_ms: float = 0.0
    note: str = ""


def _scalar(fn_lhs, fn_rhs):
    def pairs(ctx):
        return [(None, fn_lhs(ctx), fn_rhs(ctx))]
    return pairs


# sum helpers; all sums are written against the context API so the exact
# and p-adic paths share one description of every statement.

def _sum(ctx, values):
    total = ctx.frac(0)
    for v in values:
        total = total + v
    return total


def _S_alt_inv_k3(ctx, lo, hi):
    # sum (-1)^k / (k^3 C(2k,k))
    return _sum(ctx, (ctx.frac((-1) ** k, k ** 3) / ctx.binom(2 * k, k)
                      for k in range(lo, hi + 1)))


def _S_alt_binom_k2(ctx, lo, hi):
    # sum (-1)^k C(2k,k) / k^2
    return _sum(ctx, (ctx.frac((-1) ** k, k * k) * ctx.binom(2 * k, k)
                      for k in range(lo, hi + 1)))


def _S_central_sq(ctx, lo, hi, kpow):
    # sum C(2k,k)^2 / (k^kpow 16^k)
    return _sum(ctx, (ctx.binom(2 * k, k) ** 2 * ctx.frac(1, k ** kpow * 16 ** k)
                      for k in range(lo, hi + 1)))


def _S_central_sq_odd(ctx, lo, hi, opow, sign=1):
    # sum C(2k,k)^2 / ((2k+1)^opow (sign*16)^k)
    return _sum(ctx, (ctx.binom(2 * k, k) ** 2
                      * ctx.frac(1, (2 * k + 1) ** opow * (sign * 16) ** k)
                      for k in range(lo, hi + 1)))


def _S_central_odd(ctx, lo, hi, opow, sign=1):
    # sum C(2k,k) / ((2k+1)^opow (sign*16)^k)
    return _sum(ctx, (ctx.binom(2 * k, k)
                      * ctx.frac(1, (2 * k + 1) ** opow * (sign * 16) ** k)
                      for k in range(lo, hi + 1)))


def _S_inv_central_sq(ctx, lo, hi):
    # sum 16^k / (k^3 C(2k,k)^2)
    return _sum(ctx, (ctx.frac(16 ** k, k ** 3) / ctx.binom(2 * k, k) ** 2
                      for k in range(lo, hi + 1)))


def _S_quad(ctx, lo, hi, kpow):
    # sum C(2k,k) C(4k,2k) / (k^kpow 64^k)
    return _sum(ctx, (ctx.binom(2 * k, k) * ctx.binom(4 * k, 2 * k)
                      * ctx.frac(1, k ** kpow * 64 ** k)
                      for k in range(lo, hi + 1)))


def _S_inv_quad(ctx, lo, hi, half: bool):
    # sum 64^k / (k^3 C(2k,k) C(4k,2k))   [half picks C(4k,k) variant off]
    bin2 = (lambda k: ctx.binom(4 * k, k)) if half else (lambda k: ctx.binom(4 * k, 2 * k))
    return _sum(ctx, (ctx.frac(64 ** k, k ** 3)
                      / (ctx.binom(2 * k, k) * bin2(k))
                      for k in range(lo, hi + 1)))


def _S_inv_quad_shifted(ctx, lo, hi, half: bool):
    # sum 64^k / ((2k-1) k^2 C(2k,k) C(4k,2k))
    bin2 = (lambda k: ctx.binom(4 * k, k)) if half else (lambda k: ctx.binom(4 * k, 2 * k))
    return _sum(ctx, (ctx.frac(64 ** k, (2 * k - 1) * k * k)
                      / (ctx.binom(2 * k, k) * bin2(k))
                      for k in range(lo, hi + 1)))


# -- the catalog ----------------------------------------------------------


def _catalog() -> dict[str, CheckSpec]:
    C: dict[str, CheckSpec] = {}

    def add(id, desc, m, minp, status, pairs, shift=0, note=""):
        C[id] = CheckSpec(id, desc, m, minp, status, pairs, shift, note)

    add("T1.1-1.1", "alternating inverse central sum vs -2 B_{p-3}", 1, 7, "proven",
        _scalar(lambda c: _S_alt_inv_k3(c, 1, c.n),
                lambda c: c.frac(-2) * c.bern(c.p - 3)))

    add("T1.1-1.2", "alternating central sum vs (56/15) p B_{p-3}", 2, 7, "proven",
        _scalar(lambda c: _S_alt_binom_k2(c, 1, c.n),
                lambda c: c.frac(56 * c.p, 15) * c.bern(c.p - 3)))

    add("T1.1-1.3", "half-range squared central sum vs harmonic + B_{p-3}", 3, 7, "proven",
        _scalar(lambda c: _S_central_sq(c, 1, c.n, 1),
                lambda c: c.frac(-2) * c.H(c.n)
                - c.frac(7 * c.p * c.p, 2) * c.bern(c.p - 3)))

    add("T1.1-1.4a", "(-4/p^2) upper-half squared central sum vs -14 B_{p-3}", 1, 7, "proven",
        _scalar(lambda c: c.frac(-4) * c.div_pp(_S_central_sq(c, c.n + 1, c.p - 1, 1), 2),
                lambda c: c.frac(-14) * c.bern(c.p - 3)),
        shift=2)

    add("T1.1-1.4b", "reciprocal squared central sum vs -14 B_{p-3}", 1, 7, "proven",
        _scalar(lambda c: _S_inv_central_sq(c, 1, c.n),
                lambda c: c.frac(-14) * c.bern(c.p - 3)))

    add("C1.1-1.5a", "(1/p) upper-half odd sum vs -B_{p-3}/4", 1, 7, "proven",
        _scalar(lambda c: c.div_pp(_S_central_odd(c, c.n + 1, c.p - 1, 2, sign=-1), 1),
                lambda c: c.frac(-1, 4) * c.bern(c.p - 3)),
        shift=1)

    add("C1.1-1.5b", "negated reciprocal odd-cube sum vs -B_{p-3}/4", 1, 7, "proven",
        _scalar(lambda c: -_sum(c, (c.frac((-16) ** k, (2 * k + 1) ** 3)
                                    / c.binom(2 * k, k)
                                    for k in range(0, c.n))),
                lambda c: c.frac(-1, 4) * c.bern(c.p - 3)))

    add("T1.2-1.6a", "(1/p^2) upper-half odd squared sum vs -(7/4) B_{p-3}", 1, 5, "proven",
        _scalar(lambda c: c.div_pp(_S_central_sq_odd(c, c.n + 1, c.p - 1, 1), 2),
                lambda c: c.frac(-7, 4) * c.bern(c.p - 3)),
        shift=2)

    add("T1.2-1.6b", "negated reciprocal odd-cube squared sum vs -(7/4) B_{p-3}", 1, 5, "proven",
        _scalar(lambda c: -_sum(c, (c.frac(16 ** k, (2 * k + 1) ** 3)
                                    / c.binom(2 * k, k) ** 2
                                    for k in range(0, c.n))),
                lambda c: c.frac(-7, 4) * c.bern(c.p - 3)))

    add("T1.2-1.7", "half-range odd squared sum vs Fermat quotient expansion", 3, 5, "proven",
        _scalar(lambda c: _S_central_sq_odd(c, 0, c.n - 1, 1),
                lambda c: c.frac(-2) * c.qp() - c.frac(c.p) * c.qp() ** 2
                + c.frac(5 * c.p * c.p, 12) * c.bern(c.p - 3)))

    def l21a_pairs(c):
        # sign is (-1)^(floor(2k/p) - 1)
        return [(f"k={k}",
                 c.frac(k) * c.binom(2 * k, k) * c.binom(2 * (c.p - k), c.p - k),
                 c.frac((1 if (2 * k // c.p) % 2 else -1) * 2 * c.p))
                for k in range(1, c.p)]

    add("L2.1a", "k C(2k,k) C(2(p-k),p-k) = +-2p, per k", 2, 5, "proven", l21a_pairs)

    def l21b_pairs(c):
        return [(f"k={k}",
                 c.binom(c.n, k) * c.binom(c.n + k, k),
                 c.binom(2 * k, k) ** 2 * c.frac(1, (-16) ** k))
                for k in range(0, c.n + 1)]

    add("L2.1b", "C(n,k) C(n+k,k) = C(2k,k)^2/(-16)^k, per k", 2, 5, "proven", l21b_pairs,
        note="checked for k in [0,n] where C(n,k) is meaningful")

    add("L2.2-2.3", "refined Morley congruence", 4, 5, "proven",
        _scalar(lambda c: c.frac((-1) ** c.n) * c.binom(c.p - 1, c.n),
                lambda c: c.frac(4 ** (c.p - 1))
                + c.frac(c.p ** 3, 12) * c.bern(c.p - 3)))

    add("L2.2-2.4", "refined Lehmer congruence for H_{(p-1)/2}", 3, 5, "proven",
        _scalar(lambda c: c.H(c.n),
                lambda c: c.frac(-2) * c.qp() + c.frac(c.p) * c.qp() ** 2
                - c.frac(c.p * c.p) * (c.frac(2, 3) * c.qp() ** 3
                                       + c.frac(7, 12) * c.bern(c.p - 3))))

    add("L2.2-2.5a", "H_{(p-1)/2}^(2) vs (7/3) p B_{p-3}", 2, 5, "proven",
        _scalar(lambda c: c.H(c.n, 2),
                lambda c: c.frac(7 * c.p, 3) * c.bern(c.p - 3)))

    add("L2.2-2.5b", "H_{(p-1)/2}^(3) vs -2 B_{p-3}", 1, 5, "proven",
        _scalar(lambda c: c.H(c.n, 3),
                lambda c: c.frac(-2) * c.bern(c.p - 3)))

    add("L2.4a", "full squared central sum /k^2 vs -2 H^2", 2, 5, "proven",
        _scalar(lambda c: _S_central_sq(c, 1, c.p - 1, 2),
                lambda c: c.frac(-2) * c.H(c.n) ** 2))

    add("L2.4b", "full squared central sum /k^3 vs harmonic cubes", 1, 5, "proven",
        _scalar(lambda c: _S_central_sq(c, 1, c.p - 1, 3),
                lambda c: c.frac(-4, 3) * c.H(c.n) ** 3
                - c.frac(2, 3) * c.H(c.n, 3)))

    add("P2.9", "full alternating central sum vs -(4/15) p B_{p-3}", 2, 7, "proven",
        _scalar(lambda c: _S_alt_binom_k2(c, 1, c.p - 1),
                lambda c: c.frac(-4 * c.p, 15) * c.bern(c.p - 3)))

    add("P2.10", "half-range bridge congruence", 3, 7, "proven",
        _scalar(lambda c: _S_central_sq(c, 1, c.n, 1) + c.frac(2) * c.H(c.n),
                lambda c: c.frac(-5 * c.p, 8) * _S_alt_binom_k2(c, 1, c.n)
                - c.frac(7 * c.p * c.p, 6) * c.bern(c.p - 3)))

    add("P2.11", "full-range bridge congruence", 3, 7, "proven",
        _scalar(lambda c: _S_central_sq(c, 1, c.p - 1, 1) + c.frac(2) * c.H(c.n),
                lambda c: c.frac(-5 * c.p, 8) * _S_alt_binom_k2(c, 1, c.p - 1)
                - c.frac(c.p * c.p, 6) * c.bern(c.p - 3)),
        note="source prints C(2k,k)/(k16^k); the surrounding argument requires "
             "the square, which is what is checked")

    add("P2.12", "shifted-denominator squared sum vs Fermat quotient", 3, 7, "proven",
        _scalar(lambda c: _sum(c, (c.binom(2 * k, k) ** 2
                                   * c.frac(1, (2 * k + c.p) * 16 ** k)
                                   for k in range(1, c.n + 1))),
                lambda c: c.frac(2) * c.qp() + c.frac(c.p) * c.qp() ** 2
                - c.frac(c.p * c.p) * c.bern(c.p - 3)))

    add("P2.13", "shifted-denominator sum vs 1/2,1/4,1/8 splitting", 3, 7, "proven",
        _scalar(lambda c: _sum(c, (c.binom(2 * k, k) ** 2
                                   * c.frac(1, (2 * k + c.p) * 16 ** k)
                                   for k in range(1, c.n + 1))),
                lambda c: c.frac(1, 2) * _S_central_sq(c, 1, c.n, 1)
                - c.frac(c.p, 4) * _S_central_sq(c, 1, c.n, 2)
                + c.frac(c.p * c.p, 8) * _S_central_sq(c, 1, c.n, 3)))

    add("P2.14", "half squared central sum /k^2 vs Fermat quotient", 2, 7, "proven",
        _scalar(lambda c: _S_central_sq(c, 1, c.n, 2),
                lambda c: c.frac(-8) * c.qp() ** 2 + c.frac(8 * c.p) * c.qp() ** 3))

    add("P2.15", "half squared central sum /k^3 vs Fermat quotient", 1, 7, "proven",
        _scalar(lambda c: _S_central_sq(c, 1, c.n, 3),
                lambda c: c.frac(32, 3) * c.qp() ** 3
                + c.frac(4, 3) * c.bern(c.p - 3)))

    def ps11c_pairs(c):
        return [(f"k={k}",
                 c.binom(c.n, k) * c.binom(c.n + k, k) * c.frac((-1) ** k)
                 * (c.frac(1) - c.frac(c.p, 4) * (c.H(c.n + k) - c.H(c.n - k))),
                 c.binom(2 * k, k) ** 2 * c.frac(1, 16 ** k))
                for k in range(1, c.n + 1)]

    add("PS11c-3.2", "per-k refinement of the (-16)^k transform", 4, 5, "proven",
        ps11c_pairs)

    add("PH3", "H_{p-1}^(3) = 0 mod p", 1, 5, "proven",
        _scalar(lambda c: c.H(c.p - 1, 3), lambda c: c.frac(0)))

    add("L3.2-3.3", "odd-cube squared sum vs Fermat quotient cube", 1, 5, "proven",
        _scalar(lambda c: _S_central_sq_odd(c, 0, c.n - 1, 3),
                lambda c: c.frac(-4, 3) * c.qp() ** 3
                - c.frac(1, 6) * c.bern(c.p - 3)))

    add("L3.3-3.4", "odd-square squared sum vs Fermat quotient square", 2, 5, "proven",
        _scalar(lambda c: _S_central_sq_odd(c, 0, c.n - 1, 2),
                lambda c: c.frac(-2) * c.qp() ** 2
                + c.frac(2 * c.p, 3) * c.qp() ** 3
                - c.frac(c.p, 6) * c.bern(c.p - 3)))

    add("X-ST", "full central sum /k vs (8/9) p^2 B_{p-3}", 3, 5, "proven",
        _scalar(lambda c: _sum(c, (c.binom(2 * k, k) * c.frac(1, k)
                                   for k in range(1, c.p))),
                lambda c: c.frac(8 * c.p * c.p, 9) * c.bern(c.p - 3)))

    add("X-S11c-a", "half central sum /k vs Euler number", 2, 5, "proven",
        _scalar(lambda c: _sum(c, (c.binom(2 * k, k) * c.frac(1, k)
                                   for k in range(1, c.n + 1))),
                lambda c: c.frac((-1) ** ((c.p + 1) // 2) * 8 * c.p, 3)
                * c.euler_num(c.p - 3)))

    add("X-S11c-b", "half reciprocal central sum vs Euler number", 1, 5, "proven",
        _scalar(lambda c: _sum(c, (c.frac(1, k * k) / c.binom(2 * k, k)
                                   for k in range(1, c.n + 1))),
                lambda c: c.frac((-1) ** c.n * 4, 3) * c.euler_num(c.p - 3)))

    add("X-T1-a", "full alternating inverse sum vs -(2/5) H_{p-1}/p^2", 3, 7, "proven",
        _scalar(lambda c: _S_alt_inv_k3(c, 1, c.p - 1),
                lambda c: c.frac(-2, 5) * c.div_pp(c.H(c.p - 1), 2)),
        shift=2, note="Wolstenholme guarantees the shift")

    add("X-T1-b", "full alternating central sum vs (4/5) H_{p-1}/p", 3, 7, "proven",
        _scalar(lambda c: _S_alt_binom_k2(c, 1, c.p - 1),
                lambda c: c.frac(4, 5) * c.div_pp(c.H(c.p - 1), 1)),
        shift=1, note="Wolstenholme guarantees the shift")

    add("X-G1-a", "Glaisher: H_{p-1} vs -(p^2/3) B_{p-3}", 3, 5, "proven",
        _scalar(lambda c: c.H(c.p - 1),
                lambda c: c.frac(-c.p * c.p, 3) * c.bern(c.p - 3)))

    add("X-G1-b", "Glaisher: H_{p-1}^(2) vs (2/3) p B_{p-3}", 2, 5, "proven",
        _scalar(lambda c: c.H(c.p - 1, 2),
                lambda c: c.frac(2 * c.p, 3) * c.bern(c.p - 3)))

    add("X-S11c-16", "full squared central sum /16^k vs Euler number", 3, 5, "proven",
        _scalar(lambda c: _sum(c, (c.binom(2 * k, k) ** 2 * c.frac(1, 16 ** k)
                                   for k in range(0, c.p))),
                lambda c: c.frac((-1) ** c.n)
                - c.frac(c.p * c.p) * c.euler_num(c.p - 3)),
        note="summation starts at k=0; the source's k=1 lower bound drops "
             "the unit term and fails at every prime")

    add("X-T2", "full squared central sum /(k 16^k) vs -2 H_{(p-1)/2}", 3, 5, "proven",
        _scalar(lambda c: _S_central_sq(c, 1, c.p - 1, 1),
                lambda c: c.frac(-2) * c.H(c.n)))

    add("X-S11b-a", "lower odd central sum = 0 mod p^2", 2, 5, "proven",
        _scalar(lambda c: _S_central_odd(c, 0, c.n - 1, 1),
                lambda c: c.frac(0)))

    add("X-S11b-b", "upper odd central sum vs (p/3) E_{p-3}", 2, 5, "proven",
        _scalar(lambda c: _S_central_odd(c, c.n + 1, c.p - 1, 1),
                lambda c: c.frac(c.p, 3) * c.euler_num(c.p - 3)))

    add("X-T3", "lower odd-square alternating sum vs H_{p-1}/(5p)", 3, 7, "proven",
        _scalar(lambda c: _S_central_odd(c, 0, c.n - 1, 2, sign=-1),
                lambda c: c.frac(1, 5) * c.div_pp(c.H(c.p - 1), 1)),
        shift=1, note="Wolstenholme guarantees the shift")

    add("X-S11b-c", "upper odd-square alternating sum vs -(p/4) B_{p-3}", 2, 7,
        "conjectural",
        _scalar(lambda c: _S_central_odd(c, c.n + 1, c.p - 1, 2, sign=-1),
                lambda c: c.frac(-c.p, 4) * c.bern(c.p - 3)))

    add("CJ1.1-a", "upper squared central sum vs -(21/2) H_{p-1}", 4, 7,
        "conjectural",
        _scalar(lambda c: _S_central_sq(c, c.n + 1, c.p - 1, 1),
                lambda c: c.frac(-21, 2) * c.H(c.p - 1)))

    add("CJ1.1-b", "reciprocal odd-cube sum vs H_{p-1}/p^2 and B_{p-5}", 3, 7,
        "conjectural",
        _scalar(lambda c: _sum(c, (c.frac((-16) ** k, (2 * k + 1) ** 3)
                                   / c.binom(2 * k, k)
                                   for k in range(0, c.n))),
                lambda c: c.frac(-3, 4) * c.div_pp(c.H(c.p - 1), 2)
                - c.frac(47 * c.p * c.p, 400) * c.bern(c.p - 5)),
        shift=2, note="B_{p-5} forces p >= 7")

    add("CJ1.2-a", "full quartic-binomial sum vs -3H + (7/4) p^2 B_{p-3}", 3, 3,
        "conjectural",
        _scalar(lambda c: _S_quad(c, 1, c.p - 1, 1),
                lambda c: c.frac(-3) * c.H(c.n)
                + c.frac(7 * c.p * c.p, 4) * c.bern(c.p - 3)))

    add("CJ1.2-b", "half quartic-binomial sum vs -3H + Euler number", 2, 3,
        "conjectural",
        _scalar(lambda c: _S_quad(c, 1, c.n, 1),
                lambda c: c.frac(-3) * c.H(c.n)
                + c.frac((-1) ** ((c.p + 1) // 2) * 2 * c.p)
                * c.euler_num(c.p - 3)))

    _cj12_note = ("the garbled leading token in the source resolves to a "
                  "factor p on the sum; verified empirically")

    add("CJ1.2-c", "p * reciprocal quartic sum vs 32 E_{p-3}", 1, 3, "conjectural",
        _scalar(lambda c: c.frac(c.p) * _S_inv_quad(c, 1, c.n, half=False),
                lambda c: c.frac((-1) ** c.n * 32) * c.euler_num(c.p - 3)),
        shift=1, note=_cj12_note)

    add("CJ1.2-d", "p * shifted reciprocal quartic sum vs Fermat quotient", 2, 5,
        "conjectural",
        _scalar(lambda c: c.frac(c.p) * _S_inv_quad_shifted(c, 1, c.n, half=False),
                lambda c: c.frac(16) * (c.frac((-1) ** ((c.p + 1) // 2)) * c.qp()
                                        + c.frac(c.p) * c.euler_num(c.p - 3))),
        shift=1, note=_cj12_note + "; fails at p=3, so min prime 5")

    add("CJ1.2-c-lit", "literal C(4k,k) reading of CJ1.2-c", 1, 3, "exploratory",
        _scalar(lambda c: c.frac(c.p) * _S_inv_quad(c, 1, c.n, half=True),
                lambda c: c.frac((-1) ** c.n * 32) * c.euler_num(c.p - 3)),
        shift=1, note="reported for the conjectural hunt, never asserted")

    add("CJ1.2-d-lit", "literal C(4k,k) reading of CJ1.2-d", 2, 3, "exploratory",
        _scalar(lambda c: c.frac(c.p) * _S_inv_quad_shifted(c, 1, c.n, half=True),
                lambda c: c.frac(16) * (c.frac((-1) ** ((c.p + 1) // 2)) * c.qp()
                                        + c.frac(c.p) * c.euler_num(c.p - 3))),
        shift=1, note="reported for the conjectural hunt, never asserted")

    return C


CHECK_CATALOG = _catalog()


def check_ids(selector: str = "all") -> list[str]:
    """Resolve a selector (all/proven/conjectural or comma list) to ids."""
    if selector == "all":
        return list(CHECK_CATALOG)
    if selector in ("proven", "conjectural", "exploratory"):
        return [i for i, s in CHECK_CATALOG.items() if s.status == selector]
    ids = [s.strip() for s in selector.split(",") if s.strip()]
    for i in ids:
        if i not in CHECK_CATALOG:
            raise UnknownCheck(f"unknown check id {i!r}")
    return ids


# -- evaluation ------------------------------------------------------------


def _max_special_index(ids, primes) -> tuple[int, int]:
    need_b = need_e = -1
    pmax = max(primes) if primes else 0
    for i in ids:
        spec = CHECK_CATALOG[i]
        if pmax >= spec.min_prime:
            need_b = max(need_b, pmax - 3)
            if i == "CJ1.1-b":
                need_b = max(need_b, pmax - 5)
            need_e = max(need_e, pmax - 3)
    return need_b, need_e


def _compare_pairs(ctx, spec: CheckSpec):
    """Evaluate all lhs/rhs pairs of a check in one context."""
    lhs_res = rhs_res = None
    for label, lhs, rhs in spec.pairs(ctx):
        lv = ctx.residue(lhs, spec.m)
        rv = ctx.residue(rhs, spec.m)
        if lhs_res is None:
            lhs_res, rhs_res = lv, rv
        if lv != rv:
            return False, lv, rv, label
    return True, lhs_res, rhs_res, None


def evaluate_check(check_id: str, p: int, cache: SpecialCache | None = None,
                   slack: int = DEFAULT_SLACK,
                   with_padic: bool | None = None) -> CheckResult:
    """Evaluate one catalog check at one prime.

    `with_padic=None` runs the p-adic path for p <= PADIC_PATH_MAX_PRIME.
    """
    if check_id not in CHECK_CATALOG:
        raise UnknownCheck(f"unknown check id {check_id!r}")
    spec = CHECK_CATALOG[check_id]
    if p < spec.min_prime:
        return CheckResult(check_id, p, spec.m, None, None, None, spec.status,
                           applicable=False, note=f"inapplicable: needs p >= {spec.min_prime}")
    cache = cache if cache is not None else SpecialCache()
    if with_padic is None:
        with_padic = p <= PADIC_PATH_MAX_PRIME
    start = time.perf_counter()
    note = spec.note
    try:
        ok, lv, rv, bad = _compare_pairs(ExactContext(p, cache), spec)
        if bad is not None:
            note = (note + "; " if note else "") + f"first failing instance {bad}"
        agreement = None
        if with_padic:
            prec = spec.m + spec.shift + slack
            pok, plv, prv, _ = _compare_pairs(PadicContext(p, cache, prec), spec)
            agreement = (pok == ok and plv == lv and prv == rv)
        elapsed = (time.perf_counter() - start) * 1000
        return CheckResult(check_id, p, spec.m, lv, rv, ok, spec.status,
                           applicable=True, path_agreement=agreement,
                           elapsed_ms=elapsed, note=note)
    except CongrlabError as exc:
        elapsed = (time.perf_counter() - start) * 1000
        return CheckResult(check_id, p, spec.m, None, None, False, spec.status,
                           applicable=True, path_agreement=None,
                           elapsed_ms=elapsed,
                           note=(note + "; " if note else "")
                           + f"{type(exc).__name__}: {exc}")


_WORKER_CACHE: SpecialCache | None = None


def _init_worker(bern_items, euler_items):
    global _WORKER_CACHE
    _WORKER_CACHE = SpecialCache()
    _WORKER_CACHE.bernoulli.update(bern_items)
    _WORKER_CACHE.euler.update(euler_items)


def _run_prime(args):
    ids, p, slack, padic_limit = args
    return [evaluate_check(i, p, _WORKER_CACHE, slack,
                           with_padic=p <= padic_limit) for i in ids]


def summarize(results: list[CheckResult]) -> dict:
    summary = {"total": len(results), "passed": 0, "failed": 0,
               "inapplicable": 0, "path_disagreements": 0, "by_status": {}}
    for r in results:
        bucket = summary["by_status"].setdefault(
            r.status, {"passed": 0, "failed": 0, "inapplicable": 0})
        if not r.applicable:
            summary["inapplicable"] += 1
            bucket["inapplicable"] += 1
        elif r.passed:
            summary["passed"] += 1
            bucket["passed"] += 1
        else:
            summary["failed"] += 1
            bucket["failed"] += 1
        if r.path_agreement is False:
            summary["path_disagreements"] += 1
    return summary


def run_suite(ids, primes, cache: SpecialCache | None = None,
              slack: int = DEFAULT_SLACK,
              padic_limit: int = PADIC_PATH_MAX_PRIME,
              jobs: int = 1) -> tuple[list[CheckResult], dict]:
    """Evaluate every (id, prime) pair; deterministic (id, p) ordering."""
    ids = list(ids)
    primes = sorted(primes)
    for i in ids:
        if i not in CHECK_CATALOG:
            raise UnknownCheck(f"unknown check id {i!r}")
    cache = cache if cache is not None else SpecialCache()
    need_b, need_e = _max_special_index(ids, primes)
    if need_b >= 0:
        cache.ensure_bernoulli(need_b)
    if need_e >= 0:
        cache.ensure_euler(need_e)

    if jobs > 1 and len(primes) > 1:
        tasks = [(ids, p, slack, padic_limit) for p in primes]
        with ProcessPoolExecutor(
                max_workers=jobs, initializer=_init_worker,
                initargs=(cache.bernoulli, cache.euler)) as pool:
            chunks = list(pool.map(_run_prime, tasks))
        results = [r for chunk in chunks for r in chunk]
    else:
        results = [evaluate_check(i, p, cache, slack,
                                  with_padic=p <= padic_limit)
                   for p in primes for i in ids]
    results.sort(key=lambda r: (r.id, r.p))
    return results, summarize(results)
