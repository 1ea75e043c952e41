"""Multiplicative characters of F_p, Gauss and Jacobi sums, and checks of the
classical character-sum identities.

A character is stored as an exponent ``a`` modulo p-1: it sends the primitive
root g to zeta_{p-1}^a.  Gauss sums come in two flavours: double-precision
complex (``gauss_complex``) and exact in Z[zeta_{p(p-1)}] (``gauss_exact``).
Jacobi sums and binomials only need zeta_{p-1} and are always exact.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from math import gcd

import numpy as np
from sympy import totient

from .cyclo import CycloInt
from .errors import BadParameters
from .fp_core import PrimeContext

# (p-1) * phi(p-1) above this makes the exact Gauss-sum ring too large
EXACT_DEGREE_LIMIT = 2000
COMPLEX_RTOL = 1e-6


@dataclass(frozen=True)
class Character:
    ctx: PrimeContext
    a: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % (self.ctx.p - 1))

    @property
    def is_trivial(self) -> bool:
        return self.a == 0

    @property
    def order(self) -> int:
        n = self.ctx.p - 1
        return n // gcd(self.a, n)

    def conj(self) -> Character:
        return Character(self.ctx, -self.a)

    def __mul__(self, other: Character) -> Character:
        return Character(self.ctx, self.a + other.a)

    def __pow__(self, k: int) -> Character:
        return Character(self.ctx, self.a * k)

    def exponent_at(self, x: int) -> int | None:
        """k with chi(x) = zeta_{p-1}^k, or None when x = 0 (chi(0) = 0)."""
        x %= self.ctx.p
        if x == 0:
            return None
        return self.a * self.ctx.dlog[x] % (self.ctx.p - 1)

    def sign_at_minus_one(self) -> int:
        return -1 if self.a % 2 else 1

    def value_complex(self, x: int) -> complex:
        k = self.exponent_at(x)
        if k is None:
            return 0j
        return cmath.exp(2j * cmath.pi * k / (self.ctx.p - 1))


def trivial(ctx: PrimeContext) -> Character:
    return Character(ctx, 0)


def quadratic(ctx: PrimeContext) -> Character:
    return Character(ctx, (ctx.p - 1) // 2)


def all_characters(ctx: PrimeContext) -> list[Character]:
    return [Character(ctx, a) for a in range(ctx.p - 1)]


def delta(chi: Character) -> int:
    return 1 if chi.is_trivial else 0


# --- Gauss sums ------------------------------------------------------------

def gauss_complex(ctx: PrimeContext, chi: Character) -> complex:
    p = ctx.p
    total = 0j
    for x in range(1, p):
        total += chi.value_complex(x) * cmath.exp(2j * cmath.pi * x / p)
    return total


def exact_mode_available(ctx: PrimeContext) -> bool:
    p = ctx.p
    return (p - 1) * int(totient(p - 1)) <= EXACT_DEGREE_LIMIT


def gauss_exact(ctx: PrimeContext, chi: Character) -> CycloInt:
    """g(chi) in Z[zeta_m], m = p(p-1): zeta_p = zeta_m^(p-1), zeta_{p-1} = zeta_m^p."""
    p = ctx.p
    if not exact_mode_available(ctx):
        raise BadParameters(f"exact Gauss sums at p={p} exceed the degree limit")
    m = p * (p - 1)
    x = np.arange(1, p, dtype=np.int64)
    dl = np.asarray(ctx.dlog, dtype=np.int64)[1:]
    exps = (p - 1) * x + p * ((chi.a * dl) % (p - 1))
    return CycloInt.from_exponents(m, exps)


# --- Jacobi sums and binomials ---------------------------------------------

def jacobi_exact(ctx: PrimeContext, chi: Character, psi: Character) -> CycloInt:
    """J(chi, psi) in Z[zeta_{p-1}]; y in {0, 1} contribute nothing since chi(0) = 0."""
    p = ctx.p
    m = p - 1
    if p == 3:  # pragma: no cover - contexts require p > 3
        return CycloInt.integer(m, 0)
    dl = np.asarray(ctx.dlog, dtype=np.int64)
    y = np.arange(2, p, dtype=np.int64)
    exps = chi.a * dl[y] + psi.a * dl[(1 - y) % p]
    return CycloInt.from_exponents(m, exps)


def binomial_norm(ctx: PrimeContext, A: Character, B: Character) -> tuple[CycloInt, int]:
    """(A choose B) as (numerator, denominator) = (B(-1) J(A, conj B), p)."""
    return jacobi_exact(ctx, A, B.conj()) * B.sign_at_minus_one(), ctx.p


# --- identity checks -------------------------------------------------------

def check_orthogonality(ctx: PrimeContext, x: int) -> bool:
    p = ctx.p
    m = p - 1
    x %= p
    if x == 0:
        total = CycloInt.integer(m, 0)
    else:
        k = ctx.dlog[x]
        total = CycloInt.from_exponents(m, [a * k for a in range(m)])
    return total == (p - 1 if x == 1 else 0)


def gauss_inverse_sides(ctx: PrimeContext, chi: Character, mode: str = "complex"):
    p = ctx.p
    rhs = p * chi.sign_at_minus_one() - (p - 1) * delta(chi)
    if mode == "complex":
        return gauss_complex(ctx, chi) * gauss_complex(ctx, chi.conj()), rhs
    if mode == "exact":
        return gauss_exact(ctx, chi) * gauss_exact(ctx, chi.conj()), rhs
    raise BadParameters(f"unknown mode {mode!r}")


def check_gauss_inverse(ctx: PrimeContext, chi: Character, mode: str = "complex") -> bool:
    lhs, rhs = gauss_inverse_sides(ctx, chi, mode)
    if mode == "complex":
        return abs(lhs - rhs) <= COMPLEX_RTOL * ctx.p
    return lhs == rhs


def _order_m_character(ctx: PrimeContext, m: int, chi: Character | None) -> Character:
    if (ctx.p - 1) % m:
        raise BadParameters(f"m={m} does not divide p-1={ctx.p - 1}")
    if chi is None:
        chi = Character(ctx, (ctx.p - 1) // m)
    if chi.order != m:
        raise BadParameters(f"character of order {chi.order} supplied, m={m}")
    return chi


def is_hd_collision(ctx: PrimeContext, m: int, psi: Character, chi: Character | None = None) -> bool:
    """True when psi lies in the subgroup generated by chi, so factors repeat."""
    chi = _order_m_character(ctx, m, chi)
    return any((chi**i).a == psi.a for i in range(m))


def hasse_davenport_sides_complex(ctx, m: int, psi: Character, chi: Character | None = None):
    chi = _order_m_character(ctx, m, chi)
    lhs = 1 + 0j
    for i in range(m):
        lhs *= gauss_complex(ctx, psi * chi**i)
    rhs = gauss_complex(ctx, psi**m) * (psi ** (-m)).value_complex(m)
    for i in range(1, m):
        rhs *= gauss_complex(ctx, chi**i)
    return lhs, rhs


def check_hasse_davenport_complex(ctx, m: int, psi: Character, chi: Character | None = None) -> bool:
    lhs, rhs = hasse_davenport_sides_complex(ctx, m, psi, chi)
    return abs(lhs - rhs) <= COMPLEX_RTOL * ctx.p ** (m / 2)


def hasse_davenport_sides_exact(ctx, m: int, psi: Character, chi: Character | None = None):
    chi = _order_m_character(ctx, m, chi)
    p = ctx.p
    big = p * (p - 1)
    lhs = CycloInt.integer(big, 1)
    for i in range(m):
        lhs = lhs * gauss_exact(ctx, psi * chi**i)
    k = (psi ** (-m)).exponent_at(m)
    rhs = gauss_exact(ctx, psi**m) * CycloInt.monomial(big, p * k)
    for i in range(1, m):
        rhs = rhs * gauss_exact(ctx, chi**i)
    return lhs, rhs


def check_hasse_davenport_exact(ctx, m: int, psi: Character, chi: Character | None = None) -> bool:
    lhs, rhs = hasse_davenport_sides_exact(ctx, m, psi, chi)
    return lhs == rhs


def gauss_jacobi_sides(ctx: PrimeContext, chi1: Character, chi2: Character):
    """Both sides of J g(chi1 chi2) = g(chi1) g(chi2) + (p-1) chi2(-1) delta g(chi1 chi2),
    i.e. the Gauss-Jacobi relation cleared of its denominator."""
    p = ctx.p
    big = p * (p - 1)
    prod = chi1 * chi2
    g12 = gauss_exact(ctx, prod)
    lhs = jacobi_exact(ctx, chi1, chi2).lift(big) * g12
    rhs = gauss_exact(ctx, chi1) * gauss_exact(ctx, chi2)
    if prod.is_trivial:
        rhs = rhs + g12 * ((p - 1) * chi2.sign_at_minus_one())
    return lhs, rhs


def check_gauss_jacobi(ctx: PrimeContext, chi1: Character, chi2: Character) -> bool:
    lhs, rhs = gauss_jacobi_sides(ctx, chi1, chi2)
    return lhs == rhs


def binomial_trivial_sides(ctx: PrimeContext, chi: Character):
    """Numerators over p of (chi choose eps), (chi choose chi) and -1 + (p-1) delta(chi)."""
    eps = trivial(ctx)
    a, _ = binomial_norm(ctx, chi, eps)
    b, _ = binomial_norm(ctx, chi, chi)
    return a, b, CycloInt.integer(ctx.p - 1, -1 + (ctx.p - 1) * delta(chi))


def check_binomial_trivial(ctx: PrimeContext, chi: Character) -> bool:
    a, b, c = binomial_trivial_sides(ctx, chi)
    return a == c and b == c


def binomial_symmetry_sides(ctx: PrimeContext, chi: Character, psi: Character):
    lhs, _ = binomial_norm(ctx, chi, psi)
    rhs, _ = binomial_norm(ctx, psi * chi.conj(), psi)
    return lhs, rhs * psi.sign_at_minus_one()


def check_binomial_symmetry(ctx: PrimeContext, chi: Character, psi: Character) -> bool:
    lhs, rhs = binomial_symmetry_sides(ctx, chi, psi)
    return lhs == rhs
