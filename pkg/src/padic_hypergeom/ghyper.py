"""McCarthy's p-adic hypergeometric function nGn and its specializations.

For parameter rows a_1..a_n (upper) and b_1..b_n (lower) in Q cap Z_p,

    G(t) = -1/(p-1) sum_{a=0}^{p-2} (-1)^{an} omega-bar^a(t)
           prod_k (-p)^{-floor(<a_k> - a/(p-1)) - floor(<-b_k> + a/(p-1))}
                  Gamma_p(<a_k - a/(p-1)>)/Gamma_p(<a_k>)
                  Gamma_p(<-b_k + a/(p-1)>)/Gamma_p(<-b_k>).

Everything except omega-bar^a(t) is independent of t, so a ``GTable`` holds
the p-1 coefficients once and evaluates any t by a single weighted sum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import AmbiguousMatch, BadParameters, NonIntegralRational
from .fp_core import PrimeContext, legendre
from .padic_gamma import gamma_p
from .zp_arith import ZpScaled, embed_ab, frac_floor, teichmuller


@dataclass(frozen=True)
class GParams:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(Fraction(x) for x in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(x) for x in self.lower))
        if len(self.upper) != len(self.lower):
            raise BadParameters("upper and lower rows differ in length")
        if not self.upper:
            raise BadParameters("empty parameter rows")

    def check_prime(self, p: int) -> None:
        for x in self.upper + self.lower:
            if x.denominator % p == 0:
                raise NonIntegralRational(f"parameter {x} is not p-integral for p={p}")


@dataclass(frozen=True)
class GValue:
    value: ZpScaled
    recognized: tuple[int, int] | None
    precision_used: int

    def as_fraction(self) -> Fraction | None:
        if self.recognized is None:
            return None
        A, B = self.recognized
        return A + Fraction(B, self.value.p)


def family_params(n: int) -> GParams:
    upper = [Fraction(h, 3 * n) for h in range(1, 3 * n)]
    lower = [Fraction(0), Fraction(1, 2)] + [Fraction(h, 3 * n - 2) for h in range(1, 3 * n - 2)]
    return GParams(tuple(upper), tuple(lower))


TILDE_PARAMS = GParams((Fraction(1, 6), Fraction(5, 6)), (Fraction(0), Fraction(1, 2)))


@dataclass(frozen=True)
class GTable:
    """The t-independent part of the sum for one (p, K, params)."""

    ctx: PrimeContext
    params: GParams
    coeffs: tuple[ZpScaled, ...] = field(repr=False)
    gamma_args: frozenset = field(repr=False)

    def evaluate(self, t: int) -> ZpScaled:
        ctx = self.ctx
        p = ctx.p
        t %= p
        if t == 0:
            return ZpScaled.make_zero(p, ctx.K)
        w_inv = teichmuller(ctx, t).inverse()
        acc = self.coeffs[0]
        w = w_inv
        for c in self.coeffs[1:]:
            acc = acc + c * w
            w = w * w_inv
        return acc * Fraction(-1, p - 1)


def _exponent_and_args(p: int, params: GParams, a: int):
    x = Fraction(a, p - 1)
    e = 0
    num, den = [], []
    for ak in params.upper:
        fa = frac_floor(ak)[0]
        e -= frac_floor(fa - x)[1]
        num.append(frac_floor(ak - x)[0])
        den.append(fa)
    for bk in params.lower:
        fb = frac_floor(-bk)[0]
        e -= frac_floor(fb + x)[1]
        num.append(frac_floor(-bk + x)[0])
        den.append(fb)
    return e, num, den


@lru_cache(maxsize=256)
def build_table(ctx: PrimeContext, params: GParams) -> GTable:
    p, K = ctx.p, ctx.K
    params.check_prime(p)
    n = len(params.upper)
    minus_p = ZpScaled.from_int(p, K, -p)
    coeffs = []
    args = set()
    for a in range(p - 1):
        e, num, den = _exponent_and_args(p, params, a)
        term = minus_p**e
        if (a * n) % 2:
            term = -term
        for x in num:
            term = term * gamma_p(ctx, x)
        for x in den:
            term = term / gamma_p(ctx, x)
        args.update(num)
        args.update(den)
        coeffs.append(term)
    return GTable(ctx, params, tuple(coeffs), frozenset(args))


def precision_digits(value: ZpScaled) -> int:
    """Digits known counting from the p^-1 place."""
    return value.absprec + 1


def recognize(value: ZpScaled, candidates) -> tuple[int, int] | None:
    """The unique candidate (A, B), meaning A + B/p, that agrees with value at
    its full absolute precision; None when none does."""
    candidates = list(dict.fromkeys(candidates))
    if not candidates:
        raise BadParameters("empty candidate list")
    digits = precision_digits(value)
    if digits < 2:
        return None
    p, N = value.p, value.absprec
    hits = [c for c in candidates if value.agrees(embed_ab(p, N + 1, *c), N)]
    if len(hits) > 1:
        raise AmbiguousMatch(f"candidates {hits} all agree mod p^{N}")
    return hits[0] if hits else None


def default_candidates(bound: int) -> list[tuple[int, int]]:
    return [(A, B) for B in (0, -1, 1) for A in range(-bound, bound + 1)]


def _wrap(value: ZpScaled, candidates) -> GValue:
    try:
        rec = recognize(value, candidates)
    except AmbiguousMatch:
        rec = None
    return GValue(value, rec, precision_digits(value))


def evaluate_g(ctx: PrimeContext, params: GParams, t: int, candidates=None) -> GValue:
    table = build_table(ctx, params)
    value = table.evaluate(t)
    if candidates is None:
        candidates = default_candidates(len(params.upper) + 2)
    return _wrap(value, candidates)


def _check_family(ctx: PrimeContext, n: int) -> None:
    if n < 1 or (3 * n * (3 * n - 2)) % ctx.p == 0:
        raise BadParameters(f"p={ctx.p} divides 3n(3n-2) for n={n}")


def family_candidates(ctx: PrimeContext, n: int) -> list[tuple[int, int]]:
    """Every closed form r - 1 + ((1-p)/p) s with 0 <= r <= 3n and s in {-1, 0, 1}."""
    out = []
    for r in range(3 * n + 1):
        for s in (0, 1, -1):
            out.append((r - 1 - s, s))
    return out


def g_family(ctx: PrimeContext, n: int, t: int) -> GValue:
    _check_family(ctx, n)
    out = evaluate_g(ctx, family_params(n), t, family_candidates(ctx, n))
    if not out.value.zero:
        assert out.value.v >= -n, f"valuation {out.value.v} below -{n}"
    return out


def g_family_all_t(ctx: PrimeContext, n: int) -> dict[int, GValue]:
    """All t in F_p^x from one table; a single weighted sum per t."""
    _check_family(ctx, n)
    table = build_table(ctx, family_params(n))
    cands = family_candidates(ctx, n)
    return {t: _wrap(table.evaluate(t), cands) for t in range(1, ctx.p)}


def g_tilde(ctx: PrimeContext, t: int) -> GValue:
    return evaluate_g(ctx, TILDE_PARAMS, t, default_candidates(4))


def closed_form_general(ctx: PrimeContext, n: int, r: int, alpha_val: int) -> tuple[int, int]:
    """(A, B) with A + B/p = r - 1 + ((1-p)/p) phi(alpha) delta(phi^n)."""
    s = legendre(ctx, alpha_val) if n % 2 == 0 else 0
    return r - 1 - s, s
