"""Law checks shared by the hypothesis suite and the acceptance sweep."""
from __future__ import annotations

from oracles import root_count_gcd

from padic_hypergeom.fp_core import build_context, count_distinct_roots
from padic_hypergeom.padic_gamma import gamma_p
from padic_hypergeom.zp_arith import ZpScaled, teichmuller


def teichmuller_laws(p: int, K: int, a: int, b: int) -> bool:
    ctx = build_context(p, K)
    wa, wb = teichmuller(ctx, a), teichmuller(ctx, b)
    return (
        (wa * wb).agrees(teichmuller(ctx, a * b), K)
        and (wa**p).agrees(wa, K)
        and (wa ** (p - 1)).agrees(1, K)
        and (wa.u - a) % p == 0
        and teichmuller(ctx, 1).agrees(1, K)
        and teichmuller(ctx, -1).agrees(-1, K)
    )


def gamma_laws(p: int, K: int, m: int, k: int) -> bool:
    ctx = build_context(p, K)
    g0, g1 = gamma_p(ctx, m), gamma_p(ctx, m + 1)
    recurrence = g1.agrees(g0 * (-m if m % p else -1), K)
    k = min(k, K)
    continuity = g0.agrees(gamma_p(ctx, m + 5 * p**k), k)
    unit = g0.v == 0 and g0.u % p != 0
    return recurrence and continuity and unit


def ultrametric_laws(p: int, K: int, a: int, b: int) -> bool:
    x, y = ZpScaled.from_int(p, K, a), ZpScaled.from_int(p, K, b)
    s = x + y
    if x.zero or y.zero:
        return True
    ok = (x * y).v == x.v + y.v
    if not s.zero:
        ok = ok and s.v >= min(x.v, y.v)
        if x.v != y.v:
            ok = ok and s.v == min(x.v, y.v)
    return ok


def root_count_agrees(p: int, coeffs) -> bool:
    ctx = build_context(p, 2)
    return count_distinct_roots(ctx, coeffs).r == root_count_gcd(coeffs, p)
