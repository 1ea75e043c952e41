"""Truncated p-adic numbers u * p^v with per-value precision tracking.

A nonzero value stores its valuation ``v`` and a unit ``u`` known modulo
``p**prec`` (its relative precision).  A zero stores in ``v`` the absolute
precision to which it is known, i.e. it stands for O(p^v).  Precision only
ever shrinks: products keep the smaller relative precision, sums keep the
smaller absolute precision, and cancellation in a sum is reflected exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, NonIntegralRational, PrecisionExhausted, ZeroArgument
from .fp_core import PrimeContext


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class ZpScaled:
    p: int
    K: int
    v: int
    u: int
    prec: int
    zero: bool = False

    # -- constructors -------------------------------------------------
    @classmethod
    def make_zero(cls, p: int, K: int, absprec: int | None = None) -> ZpScaled:
        return cls(p, K, K if absprec is None else absprec, 0, 0, True)

    @classmethod
    def from_int(cls, p: int, K: int, n: int) -> ZpScaled:
        if n == 0:
            return cls.make_zero(p, K)
        v = valuation(n, p)
        return cls(p, K, v, (n // p**v) % p**K, K)

    @classmethod
    def from_parts(cls, p: int, K: int, v: int, u: int, prec: int | None = None) -> ZpScaled:
        """Normalize u * p^v where u is an integer known mod p^prec."""
        prec = K if prec is None else prec
        u %= p**prec
        if u == 0:
            return cls.make_zero(p, K, v + prec)
        k = valuation(u, p)
        return cls(p, K, v + k, u // p**k, prec - k)

    def _coerce(self, other) -> ZpScaled:
        if isinstance(other, ZpScaled):
            if other.p != self.p:
                raise ValueError(f"mixing primes {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return ZpScaled.from_int(self.p, self.K, other)
        if isinstance(other, Fraction):
            return embed_rational(self.p, self.K, other)
        return NotImplemented

    # -- precision ----------------------------------------------------
    @property
    def absprec(self) -> int:
        """Exponent N such that the value is known modulo p^N."""
        return self.v if self.zero else self.v + self.prec

    def digits(self) -> list[int]:
        """Base-p digits of the unit, little-endian, ``prec`` of them."""
        out, u = [], self.u
        for _ in range(self.prec):
            out.append(u % self.p)
            u //= self.p
        return out

    # -- ring operations ----------------------------------------------
    def __neg__(self) -> ZpScaled:
        if self.zero:
            return self
        return ZpScaled(self.p, self.K, self.v, (-self.u) % self.p**self.prec, self.prec)

    def __add__(self, other) -> ZpScaled:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self, other
        K = max(a.K, b.K)
        N = min(a.absprec, b.absprec)
        if a.zero and b.zero:
            return ZpScaled.make_zero(a.p, K, N)
        if a.zero or (not b.zero and b.v < a.v):
            a, b = b, a
        # a is nonzero with the smaller valuation
        if a.v >= N:
            return ZpScaled.make_zero(a.p, K, N)
        rel = N - a.v
        s = a.u
        if not b.zero:
            s += b.u * a.p ** (b.v - a.v)
        return ZpScaled.from_parts(a.p, K, a.v, s, rel)

    __radd__ = __add__

    def __sub__(self, other) -> ZpScaled:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> ZpScaled:
        return self._coerce(other) - self

    def __mul__(self, other) -> ZpScaled:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = max(self.K, other.K)
        if self.zero or other.zero:
            # O(p^a) * (u p^w + O(p^(w+prec))) = O(p^(a+w))
            lo = 0
            for x in (self, other):
                lo += x.v
            return ZpScaled.make_zero(self.p, K, lo)
        prec = min(self.prec, other.prec)
        return ZpScaled(self.p, K, self.v + other.v, self.u * other.u % self.p**prec, prec)

    __rmul__ = __mul__

    def inverse(self) -> ZpScaled:
        if self.zero:
            raise DivisionByZero("inverse of zero")
        return ZpScaled(self.p, self.K, -self.v, pow(self.u, -1, self.p**self.prec), self.prec)

    def __truediv__(self, other) -> ZpScaled:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> ZpScaled:
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int) -> ZpScaled:
        if e < 0:
            return self.inverse() ** (-e)
        if self.zero:
            if e == 0:
                return ZpScaled.from_int(self.p, self.K, 1)
            return ZpScaled.make_zero(self.p, self.K, self.v * e)
        return ZpScaled(self.p, self.K, self.v * e, pow(self.u, e, self.p**self.prec), self.prec)

    # -- comparison ---------------------------------------------------
    def is_zero_mod(self, N: int) -> bool:
        """True iff the value is divisible by p^N; needs absprec >= N."""
        if self.absprec < N:
            raise PrecisionExhausted(f"value known mod p^{self.absprec}, asked mod p^{N}")
        return self.zero or self.v >= N

    def agrees(self, other, N: int) -> bool:
        """True iff self - other is divisible by p^N."""
        return (self - other).is_zero_mod(N)

    def equal_at(self, other: ZpScaled, k: int) -> bool:
        """Relative comparison: same valuation and units congruent mod p^k."""
        if self.zero or other.zero:
            return self.zero and other.zero
        if min(self.prec, other.prec) < k:
            raise PrecisionExhausted(f"units carry fewer than {k} digits")
        return self.v == other.v and (self.u - other.u) % self.p**k == 0

    def to_fraction_mod(self) -> Fraction:
        """Exact rational u * p^v of the stored truncation (u in [0, p^prec))."""
        if self.zero:
            return Fraction(0)
        return Fraction(self.u) * Fraction(self.p) ** self.v

    def __repr__(self) -> str:
        if self.zero:
            return f"ZpScaled(0 + O({self.p}^{self.v}))"
        return f"ZpScaled({self.u} * {self.p}^{self.v} + O({self.p}^{self.absprec}))"


def embed_rational(p: int, K: int, q) -> ZpScaled:
    """Image of a p-integral rational in Z_p, known to K digits."""
    q = Fraction(q)
    if q.denominator % p == 0:
        raise NonIntegralRational(f"{q} is not p-integral for p={p}")
    if q.numerator == 0:
        return ZpScaled.make_zero(p, K)
    v = valuation(q.numerator, p)
    M = p**K
    u = (q.numerator // p**v) * pow(q.denominator, -1, M) % M
    return ZpScaled(p, K, v, u, K)


def embed_ab(p: int, K: int, A: int, B: int) -> ZpScaled:
    """The number A + B/p, known to absolute precision K."""
    if B % p == 0:
        return ZpScaled.from_int(p, K, A + B // p)
    return ZpScaled.from_parts(p, K, -1, A * p + B, K + 1)


def frac_floor(x) -> tuple[Fraction, int]:
    """Split x as (fractional part in [0, 1), floor)."""
    x = Fraction(x)
    fl = x.numerator // x.denominator
    return x - fl, fl


def residue_of(p: int, K: int, x) -> int:
    """Integer representative in [0, p^K) of a p-integral rational."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NonIntegralRational(f"{x} is not p-integral for p={p}")
    M = p**K
    return x.numerator * pow(x.denominator, -1, M) % M


def teichmuller(ctx: PrimeContext, t: int) -> ZpScaled:
    """The (p-1)-th root of unity congruent to t mod p, via t^(p^(K-1))."""
    p, K = ctx.p, ctx.K
    t %= p
    if t == 0:
        raise ZeroArgument("Teichmuller lift of 0")
    return ZpScaled(p, K, 0, pow(t, p ** (K - 1), p**K), K)
