"""Verification suites for the closed-form value identities.

Each suite returns a list of ``VerificationRecord``; failures are data, never
exceptions.  Records sort by (suite_id, p, n, t, label) so reports are
reproducible.  Run times are recorded only on request, since they would
otherwise break byte-identical output.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

from . import char_sums as cs
from . import gk_engine as gk
from .errors import PadicError, PrecisionExhausted
from .fp_core import PrimeContext, alpha, build_context, f_polynomial, legendre, primes_between, s_set
from .ghyper import closed_form_general, g_family, g_family_all_t, g_tilde, precision_digits
from .padic_gamma import multiplication_sides, reflection_sides, shifted_product_sides
from .zp_arith import ZpScaled, embed_ab

SUITES = (
    "thm_general1",
    "cor_sv2",
    "cor_zero1",
    "thm_special1",
    "cor_range",
    "thm_kummer",
    "prop31",
    "prop32",
    "sec2_identities",
    "closure",
)

MIN_DIGITS = 2


@dataclass(frozen=True)
class VerificationRecord:
    suite_id: str
    p: int | None
    n: int | None
    t: int | None
    label: str
    lhs: Any
    rhs: Any
    passed: bool
    precision_digits: int
    runtime_micros: int = 0

    def sort_key(self):
        def k(x):
            return (0, 0) if x is None else (1, x)

        return (SUITES.index(self.suite_id), k(self.p), k(self.n), k(self.t), self.label)

    def to_dict(self) -> dict:
        return {
            "suite_id": self.suite_id,
            "p": self.p,
            "n": self.n,
            "t": self.t,
            "label": self.label,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "precision_digits": self.precision_digits,
            "runtime_micros": self.runtime_micros,
        }


# --- serialization -----------------------------------------------------------

def serialize(value) -> Any:
    """JSON-ready rendering: p-adic values as valuation plus little-endian digits."""
    if isinstance(value, gk.PiMonomial):
        return {"pi_exponent": value.e, **serialize(value.u)}
    if isinstance(value, ZpScaled):
        if value.zero:
            return {"valuation": None, "digits": [], "absprec": value.absprec}
        return {"valuation": value.v, "digits": value.digits(), "absprec": value.absprec}
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, cs.CycloInt):
        return {"m": value.m, "coeffs": [int(c) for c in value.coeffs]}
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [serialize(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _clock(timings: bool):
    start = time.perf_counter_ns()

    def stop() -> int:
        return (time.perf_counter_ns() - start) // 1000 if timings else 0

    return stop


def _compare_zp(value: ZpScaled, A: int, B: int) -> tuple[bool, int, ZpScaled]:
    """Compare a value in (1/p)Z_p with A + B/p at the value's full precision."""
    digits = precision_digits(value)
    target = embed_ab(value.p, value.absprec + 1, A, B)
    if digits < MIN_DIGITS:
        return False, digits, target
    try:
        ok = value.agrees(target, value.absprec)
    except PrecisionExhausted:
        ok = False
    return ok, digits, target


def _record_zp(suite, p, n, t, label, value, A, B, stop) -> VerificationRecord:
    ok, digits, target = _compare_zp(value, A, B)
    return VerificationRecord(suite, p, n, t, label, serialize(value), serialize(target), ok, digits, stop())


# --- closed-form values ----------------------------------------------------------

def verify_thm_general1(ctx: PrimeContext, n: int, timings: bool = False) -> list[VerificationRecord]:
    values = g_family_all_t(ctx, n)
    out = []
    for t, gv in values.items():
        stop = _clock(timings)
        r = f_polynomial(ctx, n, t).r
        A, B = closed_form_general(ctx, n, r, alpha(ctx, n, t))
        out.append(_record_zp("thm_general1", ctx.p, n, t, f"r={r}", gv.value, A, B, stop))
    return out


def verify_cor_sv2(ctx: PrimeContext, timings: bool = False) -> list[VerificationRecord]:
    out = []
    for t in range(1, ctx.p):
        stop = _clock(timings)
        value = g_family(ctx, 1, t).value
        if t == 1:
            out.append(_record_zp("cor_sv2", ctx.p, 1, t, "t=1", value, 1, 0, stop))
        else:
            r = s_set(ctx, t).r
            out.append(_record_zp("cor_sv2", ctx.p, 1, t, f"#S={r}", value, r - 1, 0, stop))
    return out


def verify_thm_special1(ctx: PrimeContext, timings: bool = False) -> list[VerificationRecord]:
    out = []
    for t in range(1, ctx.p):
        stop = _clock(timings)
        value = g_tilde(ctx, t).value
        if t == 1:
            target = legendre(ctx, 3)
            label = "t=1"
        else:
            r = s_set(ctx, t).r
            target = legendre(ctx, 3 * t) * (r - 1)
            label = f"#S={r}"
        out.append(_record_zp("thm_special1", ctx.p, None, t, label, value, target, 0, stop))
    return out


RANGE_VALUES = (-2, -1, 0, 1, 2)


def verify_cor_range(ctx: PrimeContext, timings: bool = False) -> list[VerificationRecord]:
    out = []
    for t in range(ctx.p):
        stop = _clock(timings)
        gv = g_tilde(ctx, t)
        value = gv.value
        hit = None
        for c in RANGE_VALUES:
            ok, digits, _ = _compare_zp(value, c, 0)
            if ok:
                hit = c
                break
        out.append(
            VerificationRecord(
                "cor_range", ctx.p, None, t, "range", serialize(value), list(RANGE_VALUES),
                hit is not None, precision_digits(value), stop(),
            )
        )
    return out


def admissible(p: int, n: int) -> bool:
    return p > 3 and (3 * n * (3 * n - 2)) % p != 0


def cor_zero1_records(ctx: PrimeContext, n: int, timings: bool = False) -> list[VerificationRecord]:
    """n even: no zeros on F_p^x.  n odd: zero iff f_t has exactly one root."""
    values = g_family_all_t(ctx, n)
    out = []
    for t, gv in values.items():
        stop = _clock(timings)
        value = gv.value
        digits = precision_digits(value)
        try:
            is_zero = value.is_zero_mod(value.absprec) if digits >= MIN_DIGITS else None
        except PrecisionExhausted:
            is_zero = None
        r = f_polynomial(ctx, n, t).r
        expect_zero = False if n % 2 == 0 else (r == 1)
        lhs = None if is_zero is None else ("zero" if is_zero else "nonzero")
        rhs = "zero" if expect_zero else "nonzero"
        out.append(
            VerificationRecord("cor_zero1", ctx.p, n, t, f"r={r}", lhs, rhs, lhs == rhs, digits, stop())
        )
    return out


def verify_cor_zero1(p_max: int, n_range: Iterable[int], K: int | None = None,
                     timings: bool = False) -> list[VerificationRecord]:
    out = []
    for n in n_range:
        for p in primes_between(5, p_max):
            if admissible(p, n):
                ctx = build_context(p, K if K is not None else n + 2)
                out.extend(cor_zero1_records(ctx, n, timings))
    return sorted(out, key=VerificationRecord.sort_key)


def verify_thm_kummer(ctx: PrimeContext, timings: bool = False) -> list[VerificationRecord]:
    p = ctx.p
    out = []
    for t in range(2, p):
        stop = _clock(timings)
        s = (1 - t) % p
        r1 = s_set(ctx, t).r
        r2 = s_set(ctx, s).r
        lhs = g_family(ctx, 1, t).value
        rhs = g_family(ctx, 1, s).value + g_tilde(ctx, s).value
        rhs = rhs + ((r1 - r2) + (1 - r2) * legendre(ctx, 3 * s))
        digits = min(precision_digits(lhs), precision_digits(rhs))
        try:
            ok = digits >= MIN_DIGITS and lhs.agrees(rhs, digits - 1)
        except PrecisionExhausted:
            ok = False
        out.append(
            VerificationRecord(
                "thm_kummer", p, 1, t, f"r1={r1},r2={r2}", serialize(lhs), serialize(rhs), ok, digits, stop()
            )
        )
    return out


# --- character-sum identities ------------------------------------------------

def _gk_digits(ctx: PrimeContext) -> int:
    return ctx.K - 2


def _record_pi(suite, ctx, n, t, label, fn: Callable, stop) -> VerificationRecord:
    digits = _gk_digits(ctx)
    try:
        sides = fn()
        lhs, rhs = sides[0], sides[1]
        ok = digits >= MIN_DIGITS and lhs.agrees(rhs, digits)
        ls, rs = serialize(lhs), serialize(rhs)
    except PadicError as exc:
        ok, ls, rs = False, f"error: {exc}", None
    return VerificationRecord(suite, ctx.p, n, t, label, ls, rs, ok, digits, stop())


def verify_prop31(ctx: PrimeContext, n: int, timings: bool = False) -> list[VerificationRecord]:
    out = []
    for x in range(1, ctx.p):
        stop = _clock(timings)
        r = f_polynomial(ctx, n, x).r
        out.append(_record_pi("prop31", ctx, n, x, f"r={r}", lambda: gk.prop31_sides(ctx, n, x), stop))
    return out


def verify_prop32(ctx: PrimeContext, n: int, timings: bool = False) -> list[VerificationRecord]:
    out = []
    for x in range(1, ctx.p):
        stop = _clock(timings)
        out.append(_record_pi("prop32", ctx, n, x, "C=(p-1)g(phi)(1+pG)", lambda: gk.prop32_sides(ctx, n, x), stop))
    return out


def verify_closure(ctx_g: PrimeContext, ctx_gk: PrimeContext, n: int) -> list[VerificationRecord]:
    """Cross-pipeline closure: prop31 and prop32 passing must imply thm_general1 passing."""
    gen = {r.t: r.passed for r in verify_thm_general1(ctx_g, n)}
    p31 = {r.t: r.passed for r in verify_prop31(ctx_gk, n)}
    p32 = {r.t: r.passed for r in verify_prop32(ctx_gk, n)}
    out = []
    for t in sorted(gen):
        premise = p31[t] and p32[t]
        ok = (not premise) or gen[t]
        out.append(
            VerificationRecord(
                "closure", ctx_g.p, n, t, "prop31&prop32=>thm_general1",
                {"prop31": p31[t], "prop32": p32[t]}, {"thm_general1": gen[t]}, ok,
                _gk_digits(ctx_gk),
            )
        )
    return out


# --- identity battery ----------------------------------------------------------

def _bool_record(p, label, lhs, rhs, ok, digits, stop) -> VerificationRecord:
    return VerificationRecord("sec2_identities", p, None, None, label, serialize(lhs), serialize(rhs), ok, digits, stop())


def _zp_pair_record(ctx, label, sides, stop) -> VerificationRecord:
    lhs, rhs = sides
    return _bool_record(ctx.p, label, lhs, rhs, lhs.agrees(rhs, ctx.K), ctx.K, stop)


def gamma_formula_range(p: int, limit: int = 6) -> list[int]:
    return [m for m in range(1, limit + 1) if m % p]


def verify_sec2_identities(ctx: PrimeContext, mode: str = "both", timings: bool = False,
                           hd_max_prime: int = 31, gj_max_prime: int = 13,
                           exact_hd_max_prime: int = 13) -> list[VerificationRecord]:
    """Every identity of the preliminaries over its natural parameter range.

    ``mode`` selects the Gauss-sum backends for the identities that have both a
    complex and an exact form: "complex", "exact" or "both".
    """
    p = ctx.p
    # exact-ring and complex comparisons are not truncated p-adically; they report K
    exact_digits = ctx.K
    out: list[VerificationRecord] = []
    chars = cs.all_characters(ctx)
    do_complex = mode in ("complex", "both")
    do_exact = mode in ("exact", "both")

    # orthogonality, exact in Z[zeta_{p-1}]
    for x in range(p):
        stop = _clock(timings)
        ok = cs.check_orthogonality(ctx, x)
        out.append(_bool_record(p, f"orthogonality x={x}", "sum_chi chi(x)", p - 1 if x == 1 else 0, ok, exact_digits, stop))

    # g(chi) g(chi-bar) = p chi(-1) - (p-1) delta(chi)
    for chi in chars:
        if do_complex:
            stop = _clock(timings)
            lhs, rhs = cs.gauss_inverse_sides(ctx, chi, "complex")
            ok = abs(lhs - rhs) <= cs.COMPLEX_RTOL * p
            out.append(_bool_record(p, f"gauss_inverse complex a={chi.a:03d}", lhs, rhs, ok, exact_digits, stop))
        if do_exact:
            stop = _clock(timings)
            lhs, rhs = gk.pairing_sides(ctx, chi.a)
            d = _gk_digits(ctx)
            out.append(_bool_record(p, f"gauss_inverse padic j={chi.a:03d}", lhs, rhs, lhs.agrees(rhs, d), d, stop))

    # in "both" mode the two Gauss-sum backends must agree with each other
    if do_complex and do_exact and p <= exact_hd_max_prime and cs.exact_mode_available(ctx):
        for chi in chars:
            stop = _clock(timings)
            lhs = cs.gauss_exact(ctx, chi)
            rhs = cs.gauss_complex(ctx, chi)
            ok = abs(lhs.to_complex() - rhs) <= cs.COMPLEX_RTOL * p
            out.append(_bool_record(p, f"gauss_backends a={chi.a:03d}", lhs, rhs, ok, exact_digits, stop))

    # Hasse-Davenport, m | p-1, m <= 6
    if p <= hd_max_prime:
        for m in range(1, 7):
            if (p - 1) % m:
                continue
            for psi in chars:
                tag = " collision" if cs.is_hd_collision(ctx, m, psi) else ""
                if do_complex:
                    stop = _clock(timings)
                    lhs, rhs = cs.hasse_davenport_sides_complex(ctx, m, psi)
                    ok = abs(lhs - rhs) <= cs.COMPLEX_RTOL * p ** (m / 2)
                    out.append(_bool_record(p, f"hasse_davenport complex m={m} psi={psi.a:03d}{tag}", lhs, rhs, ok, exact_digits, stop))
                if do_exact:
                    stop = _clock(timings)
                    lhs, rhs = gk.hasse_davenport_padic_sides(ctx, m, psi.a)
                    d = _gk_digits(ctx)
                    ok = lhs.e == rhs.e and lhs.agrees(rhs, d)
                    out.append(_bool_record(p, f"hasse_davenport padic m={m} psi={psi.a:03d}{tag}", lhs, rhs, ok, d, stop))
                    if p <= exact_hd_max_prime and cs.exact_mode_available(ctx):
                        stop = _clock(timings)
                        lhs, rhs = cs.hasse_davenport_sides_exact(ctx, m, psi)
                        out.append(_bool_record(p, f"hasse_davenport cyclotomic m={m} psi={psi.a:03d}{tag}",
                                                lhs, rhs, lhs == rhs, exact_digits, stop))

    # Gauss-Jacobi in Z[zeta_{p(p-1)}]
    if do_exact and p <= gj_max_prime and cs.exact_mode_available(ctx):
        for c1 in chars:
            for c2 in chars:
                stop = _clock(timings)
                lhs, rhs = cs.gauss_jacobi_sides(ctx, c1, c2)
                out.append(_bool_record(p, f"gauss_jacobi a={c1.a:03d} b={c2.a:03d}", lhs, rhs, lhs == rhs, exact_digits, stop))

    # binomials
    for chi in chars:
        stop = _clock(timings)
        a, b, c = cs.binomial_trivial_sides(ctx, chi)
        out.append(_bool_record(p, f"binomial_trivial a={chi.a:03d}", [a, b], c, a == c and b == c, exact_digits, stop))
    for chi in chars:
        for psi in chars:
            stop = _clock(timings)
            lhs, rhs = cs.binomial_symmetry_sides(ctx, chi, psi)
            out.append(_bool_record(p, f"binomial_symmetry a={chi.a:03d} b={psi.a:03d}", lhs, rhs, lhs == rhs, exact_digits, stop))

    # gamma product formulas and reflection
    for m in gamma_formula_range(p):
        for r in range(p):
            stop = _clock(timings)
            out.append(_zp_pair_record(ctx, f"gamma_multiplication m={m} r={r:03d}", multiplication_sides(ctx, m, r), stop))
        for j in range(p - 1):
            stop = _clock(timings)
            out.append(_zp_pair_record(ctx, f"gamma_shift_plus t={m} j={j:03d}", shifted_product_sides(ctx, m, j, +1), stop))
            stop = _clock(timings)
            out.append(_zp_pair_record(ctx, f"gamma_shift_minus t={m} j={j:03d}", shifted_product_sides(ctx, m, j, -1), stop))
    for j in range(1, p - 1):
        stop = _clock(timings)
        out.append(_zp_pair_record(ctx, f"gamma_reflection j={j:03d}", reflection_sides(ctx, j), stop))

    return out


def summarize(records: list[VerificationRecord]) -> dict:
    passed = sum(r.passed for r in records)
    return {"total": len(records), "passed": passed, "failed": len(records) - passed}
