"""Independent reference computations used by the tests.

Each oracle avoids the code path it checks: brute-force products, sympy
polynomial gcds and direct summation.
"""
from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_from_int_poly, gf_gcd, gf_pow_mod, gf_sub


def gamma_brute(p: int, K: int, m: int) -> int:
    """Gamma_p(m) mod p^K for a nonnegative integer m, straight from the product."""
    M = p**K
    acc = 1
    for j in range(1, m):
        if j % p:
            acc = acc * j % M
    return (-acc if m % 2 else acc) % M


def rational_residue(p: int, K: int, x: Fraction) -> int:
    M = p**K
    return x.numerator * pow(x.denominator, -1, M) % M


def gamma_brute_rational(p: int, K: int, x: Fraction) -> int:
    return gamma_brute(p, K, rational_residue(p, K, Fraction(x)))


def root_count_gcd(coeffs_ascending, p: int) -> int:
    """Number of distinct roots in F_p as deg gcd(f, y^p - y)."""
    f = gf_from_int_poly(list(reversed([c % p for c in coeffs_ascending])), p)
    while f and f[0] == 0:
        f = f[1:]
    if len(f) <= 1:
        raise ValueError("constant polynomial")
    yp = gf_pow_mod([1, 0], p, f, p, ZZ)
    h = gf_sub(yp, [1, 0], p, ZZ)
    g = gf_gcd(f, h, p, ZZ) if h else f
    return len(g) - 1


def s_count_brute(p: int, t: int) -> int:
    """#{y in F_p : 27 y^3 - 27 y^2 + 4/t = 0}."""
    c = 4 * pow(t, -1, p)
    return sum(1 for y in range(p) if (27 * y**3 - 27 * y**2 + c) % p == 0)


def gamma_sweep(p: int, K: int, xs) -> dict:
    """Gamma_p mod p^K at every rational in xs, by one pass over the product."""
    M = p**K
    want = sorted({(rational_residue(p, K, Fraction(x)), Fraction(x)) for x in xs})
    out, acc, m = {}, 1, 0
    for res, x in want:
        # acc holds prod_{0<j<=m, p!|j} j; advance to m = res - 1
        while m + 1 < res:
            m += 1
            if m % p:
                acc = acc * m % M
        out[x] = ((-acc if res % 2 else acc) % M) if res else 1
    return out
