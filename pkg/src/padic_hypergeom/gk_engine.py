"""Gauss sums as exact elements pi^e * u of Z_p[pi], pi^(p-1) = -p.

Gross-Koblitz gives g(omega-bar^j) = -pi^j Gamma_p(j/(p-1)) for 0 <= j <= p-2,
where omega is the Teichmuller character.  Products of such values stay
monomials; sums are only allowed inside one pi-class, which is all the
character sums below ever need.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ClassMismatch
from .fp_core import PrimeContext, alpha, f_polynomial, legendre
from .padic_gamma import gamma_p
from .zp_arith import ZpScaled, embed_rational, teichmuller


@dataclass(frozen=True)
class PiMonomial:
    p: int
    e: int
    u: ZpScaled

    @classmethod
    def scalar(cls, ctx: PrimeContext, c) -> PiMonomial:
        if isinstance(c, ZpScaled):
            return cls(ctx.p, 0, c)
        return cls(ctx.p, 0, embed_rational(ctx.p, ctx.K, Fraction(c)))

    @classmethod
    def zero(cls, ctx: PrimeContext, e: int = 0) -> PiMonomial:
        return cls(ctx.p, e % (ctx.p - 1), ZpScaled.make_zero(ctx.p, ctx.K))

    @classmethod
    def make(cls, p: int, e: int, u: ZpScaled) -> PiMonomial:
        """Fold pi^e u into 0 <= e < p-1 using pi^(p-1) = -p."""
        q, e = divmod(e, p - 1)
        if q:
            u = u * ZpScaled.from_int(p, u.K, -p) ** q
        return cls(p, e, u)

    @property
    def is_zero(self) -> bool:
        return self.u.zero

    def __mul__(self, other) -> PiMonomial:
        if not isinstance(other, PiMonomial):
            return PiMonomial(self.p, self.e, self.u * other)
        return PiMonomial.make(self.p, self.e + other.e, self.u * other.u)

    __rmul__ = __mul__

    def __neg__(self) -> PiMonomial:
        return PiMonomial(self.p, self.e, -self.u)

    def __add__(self, other: PiMonomial) -> PiMonomial:
        if self.is_zero:
            return PiMonomial(self.p, other.e, self.u + other.u)
        if other.is_zero:
            return PiMonomial(self.p, self.e, self.u + other.u)
        if self.e != other.e:
            raise ClassMismatch(f"pi-classes {self.e} and {other.e} differ")
        return PiMonomial(self.p, self.e, self.u + other.u)

    def __sub__(self, other: PiMonomial) -> PiMonomial:
        return self + (-other)

    def agrees(self, other: PiMonomial, N: int) -> bool:
        """Equal pi-class (unless one side vanishes) and coefficients equal mod p^N."""
        if self.is_zero or other.is_zero or self.e == other.e:
            return self.u.agrees(other.u, N)
        return False


def gauss_pi(ctx: PrimeContext, j: int) -> PiMonomial:
    """g(omega-bar^j) via Gross-Koblitz."""
    p = ctx.p
    j %= p - 1
    return PiMonomial(p, j, -gamma_p(ctx, Fraction(j, p - 1)))


def gauss_pi_of(ctx: PrimeContext, a: int) -> PiMonomial:
    """g(omega^a), i.e. gauss_pi at index -a."""
    return gauss_pi(ctx, -a)


def pairing_sides(ctx: PrimeContext, j: int) -> tuple[PiMonomial, PiMonomial]:
    """g(omega-bar^j) g(omega^j) against p omega-bar^j(-1) - (p-1) delta."""
    p = ctx.p
    lhs = gauss_pi(ctx, j) * gauss_pi(ctx, -j)
    rhs_val = p * (-1) ** (j % 2) - (p - 1) * (1 if j % (p - 1) == 0 else 0)
    return lhs, PiMonomial.scalar(ctx, rhs_val)


def _guard(ctx: PrimeContext) -> int:
    return ctx.K - 2


def check_gauss_pairing(ctx: PrimeContext, j: int) -> bool:
    lhs, rhs = pairing_sides(ctx, j)
    return lhs.agrees(rhs, _guard(ctx))


# --- the character sum C(n, x) ----------------------------------------------

def c_summand(ctx: PrimeContext, n: int, j: int, w_alpha: ZpScaled) -> PiMonomial:
    """g(chi^(3n)) g(phi chi-bar) g(chi-bar) g(chi-bar^(3n-2)) chi(alpha) for chi = omega^j."""
    half = (ctx.p - 1) // 2
    term = (
        gauss_pi(ctx, -3 * n * j)
        * gauss_pi(ctx, half + j)
        * gauss_pi(ctx, j)
        * gauss_pi(ctx, (3 * n - 2) * j)
    )
    return term * (w_alpha**j)


def big_c(ctx: PrimeContext, n: int, x: int) -> PiMonomial:
    p = ctx.p
    a = alpha(ctx, n, x)
    w_alpha = teichmuller(ctx, a)
    half = (p - 1) // 2
    total = PiMonomial.zero(ctx, half)
    for j in range(p - 1):
        term = c_summand(ctx, n, j, w_alpha)
        if term.e != half:
            raise ClassMismatch(f"summand j={j} lands in pi-class {term.e}, expected {half}")
        total = total + term
    return total


def delta_phi_power(n: int) -> int:
    """delta(phi^n): phi has order 2."""
    return 1 if n % 2 == 0 else 0


def gauss_phi(ctx: PrimeContext) -> PiMonomial:
    return gauss_pi(ctx, (ctx.p - 1) // 2)


def prop31_sides(ctx: PrimeContext, n: int, x: int) -> tuple[PiMonomial, PiMonomial, int]:
    p = ctx.p
    a = alpha(ctx, n, x)
    r = f_polynomial(ctx, n, x).r
    g_phi = gauss_phi(ctx)
    corr = (p - 1) ** 2 * (1 + legendre(ctx, a) * delta_phi_power(n))
    lhs = big_c(ctx, n, x) + g_phi * ZpScaled.from_int(p, ctx.K, corr)
    if r == 0:
        rhs = PiMonomial.zero(ctx, g_phi.e)
    else:
        rhs = g_phi * ZpScaled.from_int(p, ctx.K, r * p * (p - 1))
    return lhs, rhs, r


def check_prop31(ctx: PrimeContext, n: int, x: int) -> bool:
    lhs, rhs, _ = prop31_sides(ctx, n, x)
    return lhs.agrees(rhs, _guard(ctx))


def prop32_sides(ctx: PrimeContext, n: int, x: int) -> tuple[PiMonomial, PiMonomial]:
    from .ghyper import g_family

    p = ctx.p
    G = g_family(ctx, n, x).value
    lhs = big_c(ctx, n, x)
    one_plus = ZpScaled.from_int(p, ctx.K, 1) + G * p
    rhs = gauss_phi(ctx) * (one_plus * (p - 1))
    return lhs, rhs


def check_prop32(ctx: PrimeContext, n: int, x: int) -> bool:
    lhs, rhs = prop32_sides(ctx, n, x)
    return lhs.agrees(rhs, _guard(ctx))


def hasse_davenport_padic_sides(ctx: PrimeContext, m: int, b: int) -> tuple[PiMonomial, PiMonomial]:
    """Both sides for psi = omega^b and chi = omega^((p-1)/m) of order m."""
    p = ctx.p
    if (p - 1) % m:
        raise ValueError(f"m={m} does not divide p-1")
    c = (p - 1) // m
    one = PiMonomial.scalar(ctx, 1)
    lhs = one
    for i in range(m):
        lhs = lhs * gauss_pi_of(ctx, b + c * i)
    rhs = gauss_pi_of(ctx, b * m) * (teichmuller(ctx, m) ** (-b * m))
    for i in range(1, m):
        rhs = rhs * gauss_pi_of(ctx, c * i)
    return lhs, rhs


def check_hasse_davenport_padic(ctx: PrimeContext, m: int, b: int) -> bool:
    lhs, rhs = hasse_davenport_padic_sides(ctx, m, b)
    if lhs.e != rhs.e:
        return False
    return lhs.agrees(rhs, _guard(ctx))
