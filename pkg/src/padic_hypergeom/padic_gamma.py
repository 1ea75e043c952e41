"""Morita's p-adic gamma function at precision K and checks of its product
formulas and reflection law.

``gamma_p`` evaluates Gamma_p(m) = (-1)^m prod_{0<j<m, p!|j} j for the integer
representative m of x in [0, p^K).  The product is not taken term by term:
a block of p^L consecutive integers starting at a multiple of p^L contributes
P_L(s/p), where

    P_L(z) = prod_{0<j<p^L, p!|j} (p z + j)   (mod p^K).

The coefficient of z^i in P_L is divisible by p^i, so P_L truncated to degree
< K is exact mod p^K, and P_L is assembled from p shifted copies of P_{L-1}.
Walking the base-p digits of m then costs O(p K^2) per argument.

``batch_gamma`` is the plain incremental sweep over m = 1, 2, ... and serves as
an independent route for cross-checking.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import BadParameters, NonIntegralRational
from .fp_core import PrimeContext
from .zp_arith import ZpScaled, frac_floor, residue_of, teichmuller


# --- block polynomials -------------------------------------------------------

def _poly_mul(a: list[int], b: list[int], K: int, M: int) -> list[int]:
    out = [0] * K
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), K - i)):
                out[i + j] += x * b[j]
    return [c % M for c in out]


def _poly_shift(a: list[int], h: int, M: int) -> list[int]:
    """Coefficients of a(z + h)."""
    n = len(a)
    out = [0] * n
    for k, c in enumerate(a):
        if c:
            hp = 1
            for i in range(k, -1, -1):
                out[i] += c * comb(k, i) * hp
                hp *= h
    return [c % M for c in out]


def _poly_eval(a: list[int], z: int, M: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * z + c) % M
    return acc


@lru_cache(maxsize=64)
def _block_polys(p: int, K: int) -> tuple[tuple[int, ...], ...]:
    """(P_1, ..., P_{K-1}) as coefficient tuples of length K; index 0 unused."""
    M = p**K
    polys: list[list[int]] = [[1] + [0] * (K - 1)]
    if K >= 2:
        P = [1] + [0] * (K - 1)
        for j in range(1, p):
            P = _poly_mul(P, [j, p], K, M)
        polys.append(P)
    for L in range(2, K):
        prev = polys[L - 1]
        P = [1] + [0] * (K - 1)
        step = p ** (L - 2)
        for c in range(p):
            P = _poly_mul(P, _poly_shift(prev, c * step, M), K, M)
        polys.append(P)
    return tuple(tuple(P) for P in polys)


def unit_factorial(p: int, K: int, m: int) -> int:
    """prod_{0<j<m, p!|j} j mod p^K for 0 <= m < p^K."""
    M = p**K
    polys = _block_polys(p, K)
    digits = []
    x = m
    for _ in range(K):
        digits.append(x % p)
        x //= p
    acc, s = 1, 0
    for L in range(K - 1, 0, -1):
        P = polys[L]
        for _ in range(digits[L]):
            acc = acc * _poly_eval(P, s // p, M) % M
            s += p**L
    for j in range(s + 1, s + digits[0]):
        acc = acc * j % M
    return acc


def gamma_int(p: int, K: int, m: int) -> int:
    """Gamma_p(m) mod p^K for an integer 0 <= m < p^K."""
    M = p**K
    val = unit_factorial(p, K, m)
    return (-val if m % 2 else val) % M


@lru_cache(maxsize=1 << 16)
def _gamma_cached(p: int, K: int, x: Fraction) -> ZpScaled:
    m = residue_of(p, K, x)
    return ZpScaled(p, K, 0, gamma_int(p, K, m), K)


def gamma_p(ctx: PrimeContext, x) -> ZpScaled:
    """Gamma_p(x) mod p^K for a p-integral rational x; always a unit."""
    x = Fraction(x)
    if x.denominator % ctx.p == 0:
        raise NonIntegralRational(f"{x} is not p-integral for p={ctx.p}")
    return _gamma_cached(ctx.p, ctx.K, x)


# --- the incremental sweep ---------------------------------------------------

@dataclass(frozen=True)
class GammaTableRequest:
    ctx: PrimeContext
    args: tuple[Fraction, ...]

    def __post_init__(self):
        p, K = self.ctx.p, self.ctx.K
        clean = {Fraction(a) for a in self.args}
        for a in clean:
            if a.denominator % p == 0:
                raise NonIntegralRational(f"{a} is not p-integral for p={p}")
        ordered = sorted(clean, key=lambda a: (residue_of(p, K, a), a))
        object.__setattr__(self, "args", tuple(ordered))


def batch_gamma(req: GammaTableRequest) -> dict[Fraction, ZpScaled]:
    """Gamma_p at every requested argument from a single sweep over m.

    Uses Gamma_p(m+1) = -m Gamma_p(m) when p!|m and -Gamma_p(m) otherwise.
    Cost is linear in the largest residue, so keep p^K moderate.
    """
    p, K = req.ctx.p, req.ctx.K
    M = p**K
    if not req.args:
        return {}
    targets = [(residue_of(p, K, a), a) for a in req.args]
    out: dict[Fraction, ZpScaled] = {}
    g, m = 1, 0
    for res, a in targets:
        while m < res:
            step = -m if m % p else -1
            g, m = g * step % M, m + 1
        out[a] = ZpScaled(p, K, 0, g, K)
    return out


# --- identities --------------------------------------------------------------

def _prod(vals, ctx: PrimeContext) -> ZpScaled:
    acc = ZpScaled.from_int(ctx.p, ctx.K, 1)
    for v in vals:
        acc = acc * v
    return acc


def _frac(x) -> Fraction:
    return frac_floor(x)[0]


def reflection_sides(ctx: PrimeContext, j: int) -> tuple[ZpScaled, ZpScaled]:
    p = ctx.p
    x = Fraction(j, p - 1)
    lhs = gamma_p(ctx, _frac(1 - x)) * gamma_p(ctx, _frac(x))
    rhs = ZpScaled.from_int(p, ctx.K, -((-1) ** j))
    return lhs, rhs


def check_reflection(ctx: PrimeContext, j: int) -> bool:
    if not 1 <= j <= ctx.p - 2:
        raise BadParameters(f"j must lie in [1, p-2], got {j}")
    lhs, rhs = reflection_sides(ctx, j)
    return lhs.agrees(rhs, ctx.K)


def multiplication_sides(ctx: PrimeContext, m: int, r: int) -> tuple[ZpScaled, ZpScaled]:
    """Both sides of the Gauss multiplication formula at x = r/(p-1)."""
    p = ctx.p
    if m < 1 or m % p == 0:
        raise BadParameters(f"need m >= 1 with p !| m, got m={m}")
    if not 0 <= r <= p - 1:
        raise BadParameters(f"need 0 <= r <= p-1, got r={r}")
    x = Fraction(r, p - 1)
    lhs = _prod((gamma_p(ctx, (x + h) / m) for h in range(m)), ctx)
    # omega(m^((1-x)(1-p))) with (1-x)(1-p) = r - (p-1)
    w = teichmuller(ctx, m) ** (r - (p - 1))
    rhs = w * gamma_p(ctx, x) * _prod((gamma_p(ctx, Fraction(h, m)) for h in range(1, m)), ctx)
    return lhs, rhs


def shifted_product_sides(ctx: PrimeContext, t: int, j: int, sign: int) -> tuple[ZpScaled, ZpScaled]:
    """Sides of the two shifted product formulas; sign=+1 or -1 picks the variant."""
    p = ctx.p
    if t < 1 or t % p == 0:
        raise BadParameters(f"need t >= 1 with p !| t, got t={t}")
    if not 0 <= j <= p - 2:
        raise BadParameters(f"need 0 <= j <= p-2, got j={j}")
    y = Fraction(j, p - 1)
    tail = _prod((gamma_p(ctx, Fraction(h, t)) for h in range(1, t)), ctx)
    w = teichmuller(ctx, t) ** (sign * t * j)
    lhs = w * gamma_p(ctx, _frac(sign * t * y)) * tail
    if sign > 0:
        rhs = _prod((gamma_p(ctx, _frac(Fraction(h, t) + y)) for h in range(t)), ctx)
    else:
        rhs = _prod((gamma_p(ctx, _frac(Fraction(h, t) - y)) for h in range(1, t + 1)), ctx)
    return lhs, rhs


def check_product_formulas(ctx: PrimeContext, formula: str, m_or_t: int, x_or_j: int) -> bool:
    """formula is "multiplication", "shift_plus" or "shift_minus"."""
    if formula == "multiplication":
        lhs, rhs = multiplication_sides(ctx, m_or_t, x_or_j)
    elif formula == "shift_plus":
        lhs, rhs = shifted_product_sides(ctx, m_or_t, x_or_j, +1)
    elif formula == "shift_minus":
        lhs, rhs = shifted_product_sides(ctx, m_or_t, x_or_j, -1)
    else:
        raise BadParameters(f"unknown product formula {formula!r}")
    return lhs.agrees(rhs, ctx.K)
