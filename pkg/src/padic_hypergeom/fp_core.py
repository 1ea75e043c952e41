"""Prime-field helpers: primitive roots, discrete logs, Legendre symbols and
exhaustive root counting for the polynomial families used by the verifiers.

Polynomials are dense coefficient lists in ascending order: ``coeffs[i]`` is
the coefficient of ``y**i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BadParameters,
    BadPrecision,
    NotPrime,
    PrimeTooSmall,
    ZeroArgument,
    ZeroPolynomial,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if is_prime(q)]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def least_primitive_root(p: int) -> int:
    """Smallest generator of (Z/p)^x, found by linear search."""
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise NotPrime(p)  # pragma: no cover - every prime has a generator


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime p > 3 with its least primitive root, discrete-log table
    and working p-adic precision K."""

    p: int
    g: int
    K: int
    dlog: tuple[int, ...] = field(repr=False)  # dlog[x] for x in [0, p); dlog[0] unused
    powers: tuple[int, ...] = field(repr=False)  # powers[k] = g**k mod p

    @property
    def modulus(self) -> int:
        return self.p**self.K

    def with_precision(self, K: int) -> PrimeContext:
        if K == self.K:
            return self
        return build_context(self.p, K)

    def log(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroArgument("discrete log of 0")
        return self.dlog[x]


def build_context(p: int, K: int) -> PrimeContext:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p <= 3:
        raise PrimeTooSmall(f"p must exceed 3, got {p}")
    if K < 2:
        raise BadPrecision(f"precision K must be at least 2, got {K}")
    g = least_primitive_root(p)
    powers = [1] * (p - 1)
    for k in range(1, p - 1):
        powers[k] = powers[k - 1] * g % p
    dlog = [0] * p
    for k, x in enumerate(powers):
        dlog[x] = k
    return PrimeContext(p=p, g=g, K=K, dlog=tuple(dlog), powers=tuple(powers))


def legendre(ctx: PrimeContext, a: int) -> int:
    a %= ctx.p
    if a == 0:
        return 0
    return 1 if pow(a, (ctx.p - 1) // 2, ctx.p) == 1 else -1


def alpha(ctx: PrimeContext, n: int, t: int) -> int:
    """(-1)^n (3n-2)^(3n-2) / ((3n)^(3n) t) reduced in F_p."""
    p = ctx.p
    if n < 1 or (3 * n * (3 * n - 2)) % p == 0:
        raise BadParameters(f"p={p} divides 3n(3n-2) for n={n}")
    t %= p
    if t == 0:
        raise ZeroArgument("alpha is undefined at t = 0")
    num = (-1) ** n * pow(3 * n - 2, 3 * n - 2, p)
    den = pow(3 * n, 3 * n, p) * t
    return num * pow(den, -1, p) % p


@dataclass(frozen=True)
class RootCount:
    coeffs: tuple[int, ...]
    r: int
    roots: tuple[int, ...]


def poly_eval(coeffs, y: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * y + c) % p
    return acc


def count_distinct_roots(ctx: PrimeContext, coeffs) -> RootCount:
    p = ctx.p
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ZeroPolynomial("the zero polynomial has every element as a root")
    roots = tuple(y for y in range(p) if poly_eval(cs, y, p) == 0)
    return RootCount(coeffs=tuple(cs), r=len(roots), roots=roots)


def f_coeffs(ctx: PrimeContext, n: int, t: int) -> list[int]:
    """Coefficients of y^(3n) - 2y^(3n-1) + y^(3n-2) - (-1)^n 4 alpha."""
    p = ctx.p
    a = alpha(ctx, n, t)
    cs = [0] * (3 * n + 1)
    cs[3 * n] = 1
    cs[3 * n - 1] = -2 % p
    cs[3 * n - 2] = (cs[3 * n - 2] + 1) % p
    cs[0] = (cs[0] - (-1) ** n * 4 * a) % p
    return cs


def f_polynomial(ctx: PrimeContext, n: int, t: int) -> RootCount:
    return count_distinct_roots(ctx, f_coeffs(ctx, n, t))


def s_coeffs(ctx: PrimeContext, t: int) -> list[int]:
    """Coefficients of 27y^3 - 27y^2 + 4/t."""
    p = ctx.p
    t %= p
    if t == 0:
        raise ZeroArgument("S(t) is undefined at t = 0")
    return [4 * pow(t, -1, p) % p, 0, -27 % p, 27 % p]


def s_set(ctx: PrimeContext, t: int) -> RootCount:
    return count_distinct_roots(ctx, s_coeffs(ctx, t))
