"""Bernoulli numbers, Euler numbers, harmonic numbers and Fermat quotients.

The exact recurrences are the source of truth.  The power-sum route
(`bernoulli_mod_p_fast`) exists only as an independent cross-check of the
residues the congruence suite consumes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

from .arith import Residue, rat_reduce_mod
from .errors import CorruptCache, InternalInconsistency

CACHE_VERSION = "congrlab-cache-v1"
_VERIFY_UP_TO = 20  # reloaded entries up to this index are re-derived


class SpecialCache:
    """Append-only table of Bernoulli and Euler numbers.

    Bernoulli convention: B_1 = -1/2 (only even indices feed any check).
    """

    def __init__(self):
        self.bernoulli: dict[int, Fraction] = {}
        self.euler: dict[int, int] = {}
        self.version = CACHE_VERSION

    # -- recurrences ----------------------------------------------------

    def ensure_bernoulli(self, n: int) -> None:
        """Extend the table through index n via sum C(m+1,j) B_j = 0."""
        start = 0
        while start in self.bernoulli:
            start += 1
        for m in range(start, n + 1):
            if m == 0:
                self.bernoulli[0] = Fraction(1)
                continue
            if m % 2 == 1 and m > 1:
                self.bernoulli[m] = Fraction(0)
                continue
            acc = Fraction(0)
            for j in range(0, m):
                bj = self.bernoulli[j]
                if bj:
                    acc += math.comb(m + 1, j) * bj
            self.bernoulli[m] = -acc / (m + 1)

    def ensure_euler(self, n: int) -> None:
        """Extend through index n via sum C(2m,2k) E_2k = 0, E_0 = 1."""
        self.euler.setdefault(0, 1)
        start = 0
        while start in self.euler:
            start += 2
        for m in range(start // 2, n // 2 + 1):
            if m == 0:
                continue
            self.euler[2 * m] = -sum(
                math.comb(2 * m, 2 * k) * self.euler[2 * k] for k in range(m))

    # -- persistence ----------------------------------------------------

    def save(self, path) -> None:
        lines = [self.version]
        for n in sorted(self.bernoulli):
            b = self.bernoulli[n]
            lines.append(f"B {n} {b.numerator} {b.denominator}")
        for n in sorted(self.euler):
            lines.append(f"E {n} {self.euler[n]}")
        Path(path).write_text("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path) -> "SpecialCache":
        """Load and spot-verify a cache file; missing file gives an empty cache."""
        cache = cls()
        path = Path(path)
        if not path.exists():
            return cache
        lines = path.read_text().splitlines()
        if not lines or lines[0] != CACHE_VERSION:
            raise CorruptCache(f"{path}: line 1: bad or missing version tag")
        for idx, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            parts = line.split()
            try:
                if parts[0] == "B" and len(parts) == 4:
                    n, num, den = int(parts[1]), int(parts[2]), int(parts[3])
                    cache.bernoulli[n] = Fraction(num, den)
                elif parts[0] == "E" and len(parts) == 3:
                    cache.euler[int(parts[1])] = int(parts[2])
                else:
                    raise ValueError
            except (ValueError, ZeroDivisionError):
                raise CorruptCache(f"{path}: line {idx}: unparsable record {line!r}")
        cache._verify(path)
        return cache

    def _verify(self, path) -> None:
        fresh = SpecialCache()
        small_b = [n for n in self.bernoulli if n <= _VERIFY_UP_TO]
        small_e = [n for n in self.euler if n <= _VERIFY_UP_TO]
        if small_b:
            fresh.ensure_bernoulli(max(small_b))
        if small_e:
            fresh.ensure_euler(max(small_e))
        # entries must form contiguous prefixes (the recurrences need all
        # earlier indices), so any loaded small index is recomputable
        for n in small_b:
            if n in fresh.bernoulli and fresh.bernoulli[n] != self.bernoulli[n]:
                raise CorruptCache(
                    f"{path}: B {n} = {self.bernoulli[n]} fails the recurrence "
                    f"(expected {fresh.bernoulli[n]})")
        for n in small_e:
            if n in fresh.euler and fresh.euler[n] != self.euler[n]:
                raise CorruptCache(
                    f"{path}: E {n} = {self.euler[n]} fails the recurrence "
                    f"(expected {fresh.euler[n]})")


_DEFAULT_CACHE = SpecialCache()


def bernoulli_exact(n: int, cache: SpecialCache | None = None) -> Fraction:
    """B_n under the B_1 = -1/2 convention."""
    cache = cache if cache is not None else _DEFAULT_CACHE
    if n not in cache.bernoulli:
        cache.ensure_bernoulli(n)
    return cache.bernoulli[n]


def euler_exact(n: int, cache: SpecialCache | None = None) -> int:
    """Euler number E_n from the secant-expansion recurrence."""
    cache = cache if cache is not None else _DEFAULT_CACHE
    if n % 2 == 1:
        return 0
    if n not in cache.euler:
        cache.ensure_euler(n)
    return cache.euler[n]


def harmonic_exact(n: int, order: int = 1) -> Fraction:
    """H_n^(m) = sum_{0<k<=n} 1/k^m, exactly."""
    return sum((Fraction(1, k ** order) for k in range(1, n + 1)), Fraction(0))


def harmonic_prefix(n: int, order: int = 1) -> list[Fraction]:
    """[H_0^(m), ..., H_n^(m)] in one pass."""
    out = [Fraction(0)]
    acc = Fraction(0)
    for k in range(1, n + 1):
        acc += Fraction(1, k ** order)
        out.append(acc)
    return out


def bernoulli_mod_p_fast(m: int, p: int, cache: SpecialCache | None = None) -> Residue:
    """B_m mod p via the power sum T = sum a^m mod p^2, independent of the
    exact recurrence; the two routes are compared and must agree."""
    if m % 2 or not 2 <= m <= p - 3:
        raise ValueError("need even m with 2 <= m <= p-3")
    p2 = p * p
    total = sum(pow(a, m, p2) for a in range(1, p)) % p2
    if total % p:
        raise InternalInconsistency(
            f"power sum for B_{m} mod {p} is not divisible by {p}")
    fast = (total // p) % p
    exact = rat_reduce_mod(bernoulli_exact(m, cache), p, 1).value
    if fast != exact:
        raise InternalInconsistency(
            f"B_{m} mod {p}: power-sum route {fast} != exact route {exact}")
    return Residue(p, 1, fast)


def fermat_quotient_mod(p: int, e: int = 1) -> Residue:
    """q_p(2) = (2^(p-1) - 1)/p, reduced mod p^e."""
    if p < 3:
        raise ValueError("p must be an odd prime")
    t = (pow(2, p - 1, p ** (e + 1)) - 1) % p ** (e + 1)
    assert t % p == 0, "Fermat's little theorem violated"
    return Residue(p, e, (t // p) % p ** e)
