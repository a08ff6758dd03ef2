"""Exact rational, residue and valuation-aware p-adic arithmetic.

Exact rationals are `fractions.Fraction` throughout; residues mod p^e and
truncated p-adic numbers are the two modular number types defined here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisionByZeroMarker,
    NegativeValuation,
    NotAUnit,
    PrecisionExhausted,
)

Rational = Fraction


def vp_int(a: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if a == 0:
        raise ValueError("valuation of 0 is undefined")
    a = abs(a)
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def vp_rational(r, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    r = Fraction(r)
    return vp_int(r.numerator, p) - vp_int(r.denominator, p)


@dataclass(frozen=True)
class Residue:
    """An element of Z/p^e, kept with its modulus."""

    p: int
    e: int
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.p ** self.e:
            raise ValueError(f"residue {self.value} out of range for {self.p}^{self.e}")

    @property
    def modulus(self) -> int:
        return self.p ** self.e

    def __int__(self) -> int:
        return self.value


def mod_inverse(a: int, p: int, e: int = 1) -> Residue:
    """Inverse of a modulo p^e; raises NotAUnit when p | a."""
    if a % p == 0:
        raise NotAUnit(f"{a} is not a unit mod {p}^{e}")
    m = p ** e
    return Residue(p, e, pow(a, -1, m))


def rat_reduce_mod(r, p: int, e: int) -> Residue:
    """Reduce a p-integral rational mod p^e (num * den^{-1})."""
    r = Fraction(r)
    if r.denominator % p == 0:
        raise NegativeValuation(f"{r} has p={p} in its denominator")
    m = p ** e
    return Residue(p, e, r.numerator * pow(r.denominator, -1, m) % m)


class PAdic:
    """Truncated p-adic number p^val * unit + O(p^(val+prec)).

    A value that cancels below the working precision is kept as a zero
    marker carrying only the lower bound on its valuation (`unit is None`);
    exact zero has an infinite bound (`val is None`).  No digit is ever
    fabricated after cancelation.
    """

    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p: int, val, unit, prec: int):
        self.p = p
        self.val = val
        self.unit = unit
        self.prec = prec

    # -- constructors -------------------------------------------------

    @classmethod
    def zero_marker(cls, p: int, bound=None) -> "PAdic":
        return cls(p, bound, None, 0)

    @classmethod
    def from_rational(cls, r, p: int, prec: int) -> "PAdic":
        r = Fraction(r)
        if r == 0:
            return cls.zero_marker(p, prec)
        vn = vp_int(r.numerator, p)
        vd = vp_int(r.denominator, p)
        m = p ** prec
        unit = (r.numerator // p ** vn) * pow(r.denominator // p ** vd, -1, m) % m
        return cls(p, vn - vd, unit, prec)

    # -- predicates ----------------------------------------------------

    @property
    def is_zero_marker(self) -> bool:
        return self.unit is None

    def _abs_prec(self):
        """Absolute precision: the value is known mod p^(this)."""
        if self.unit is None:
            return math.inf if self.val is None else self.val
        return self.val + self.prec

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "PAdic":
        if isinstance(other, PAdic):
            if other.p != self.p:
                raise ValueError("mixed primes in p-adic arithmetic")
            return other
        if isinstance(other, (int, Fraction)):
            return PAdic.from_rational(other, self.p, max(self.prec, 1))
        return NotImplemented

    def __add__(self, other) -> "PAdic":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.p
        abs_prec = min(self._abs_prec(), other._abs_prec())
        if abs_prec is math.inf:
            return PAdic.zero_marker(p)
        operands = [x for x in (self, other) if x.unit is not None]
        if not operands:
            return PAdic.zero_marker(p, abs_prec)
        base = min(x.val for x in operands)
        digits = abs_prec - base
        if digits <= 0:
            return PAdic.zero_marker(p, abs_prec)
        m = p ** digits
        total = sum(p ** (x.val - base) * x.unit for x in operands) % m
        if total == 0:
            return PAdic.zero_marker(p, abs_prec)
        t = vp_int(total, p)
        val = base + t
        prec = abs_prec - val
        if prec <= 0:
            return PAdic.zero_marker(p, abs_prec)
        return PAdic(p, val, (total // p ** t) % p ** prec, prec)

    __radd__ = __add__

    def __neg__(self) -> "PAdic":
        if self.unit is None:
            return self
        return PAdic(self.p, self.val, (-self.unit) % self.p ** self.prec, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "PAdic":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.p
        if self.unit is None or other.unit is None:
            if self.val is None or (other.unit is None and other.val is None):
                return PAdic.zero_marker(p)
            if self.unit is None and other.unit is None:
                return PAdic.zero_marker(p, self.val + other.val)
            marker, x = (self, other) if self.unit is None else (other, self)
            if marker.val is None:
                return PAdic.zero_marker(p)
            return PAdic.zero_marker(p, marker.val + x.val)
        prec = min(self.prec, other.prec)
        return PAdic(p, self.val + other.val,
                     self.unit * other.unit % p ** prec, prec)

    __rmul__ = __mul__

    def inv(self) -> "PAdic":
        if self.unit is None:
            raise DivisionByZeroMarker("cannot invert a p-adic zero marker")
        return PAdic(self.p, -self.val, pow(self.unit, -1, self.p ** self.prec),
                     self.prec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k: int) -> "PAdic":
        if k < 0:
            return self.inv() ** (-k)
        result = PAdic.from_rational(1, self.p, self.prec if self.prec else 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def int_scale(self, c: int) -> "PAdic":
        """Multiply by an exact integer."""
        if not isinstance(c, int):
            raise TypeError("int_scale expects an integer")
        if self.unit is None:
            if c == 0 or self.val is None:
                return PAdic.zero_marker(self.p) if c == 0 else self
            return PAdic.zero_marker(self.p, self.val + vp_int(c, self.p))
        return self * PAdic.from_rational(c, self.p, self.prec)

    # -- extraction ----------------------------------------------------

    def shift(self, s: int) -> "PAdic":
        """Divide by p^s (valuation shift)."""
        if self.unit is None:
            if self.val is None:
                return self
            return PAdic.zero_marker(self.p, self.val - s)
        return PAdic(self.p, self.val - s, self.unit, self.prec)

    def residue(self, e: int) -> Residue:
        """Extract the value mod p^e; only significant digits are reported."""
        if self.unit is None:
            if self.val is None or self.val >= e:
                return Residue(self.p, e, 0)
            raise PrecisionExhausted(
                f"zero marker only guarantees valuation >= {self.val}, need {e}")
        if self.val < 0:
            raise NegativeValuation(
                f"p-adic value has valuation {self.val} < 0")
        if self.val + self.prec < e:
            raise PrecisionExhausted(
                f"value known mod p^{self.val + self.prec}, need p^{e}")
        return Residue(self.p, e, self.p ** self.val * self.unit % self.p ** e)

    def __repr__(self):
        if self.unit is None:
            bound = "inf" if self.val is None else self.val
            return f"PAdic(p={self.p}, O(p^{bound}))"
        return (f"PAdic(p={self.p}, {self.p}^{self.val}*{self.unit} "
                f"+ O(p^{self.val + self.prec}))")


def padic_from_rat(r, p: int, prec: int) -> PAdic:
    return PAdic.from_rational(r, p, prec)


def padic_arith(op: str, x: PAdic, y=None) -> PAdic:
    """Uniform dispatcher over the p-adic primitive operations."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inv()
    if op == "int_scale":
        return x.int_scale(y)
    raise ValueError(f"unknown p-adic operation {op!r}")


# -- binomial coefficients and primes ----------------------------------


def binomial_big(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 outside [0, n]."""
    if n < 0:
        raise ValueError("binomial_big requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _digit_sum(n: int, p: int) -> int:
    s = 0
    while n:
        s += n % p
        n //= p
    return s


def vp_binomial(n: int, k: int, p: int) -> int:
    """v_p(C(n,k)) by Kummer's theorem: carries adding k and n-k base p."""
    if not 0 <= k <= n:
        raise ValueError("vp_binomial requires 0 <= k <= n")
    return (_digit_sum(k, p) + _digit_sum(n - k, p) - _digit_sum(n, p)) // (p - 1)


@dataclass(frozen=True)
class PrimeRange:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty prime range {self.lo}:{self.hi}")


def sieve_primes(rng: PrimeRange) -> list[int]:
    """All primes in [lo, hi], ascending."""
    lo, hi = rng.lo, rng.hi
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, math.isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(sieve[q * q :: q]))
    return [q for q in range(max(lo, 2), hi + 1) if sieve[q]]
