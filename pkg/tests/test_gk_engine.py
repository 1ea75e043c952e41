from fractions import Fraction

import pytest

from padic_hypergeom.char_sums import Character, gauss_complex, quadratic
from padic_hypergeom.errors import ClassMismatch
from padic_hypergeom.fp_core import build_context, f_polynomial
from padic_hypergeom.ghyper import g_family
from padic_hypergeom.gk_engine import (
    PiMonomial,
    big_c,
    c_summand,
    check_gauss_pairing,
    check_hasse_davenport_padic,
    check_prop31,
    check_prop32,
    gauss_phi,
    gauss_pi,
    pairing_sides,
    prop31_sides,
)
from padic_hypergeom.padic_gamma import gamma_p
from padic_hypergeom.zp_arith import ZpScaled, teichmuller


def test_gauss_pi_of_trivial_character():
    ctx = build_context(7, 4)
    g = gauss_pi(ctx, 0)
    assert g.e == 0 and g.u.agrees(-1, 4)


@pytest.mark.parametrize("p", [5, 7, 13])
def test_gauss_phi(p):
    ctx = build_context(p, 4)
    g = gauss_pi(ctx, (p - 1) // 2)
    assert g.e == (p - 1) // 2
    assert g.u.agrees(-gamma_p(ctx, Fraction(1, 2)), 4)
    assert gauss_phi(ctx) == g


@pytest.mark.parametrize("p", [5, 7, 11, 13, 31])
def test_pairing_all_j(p):
    ctx = build_context(p, 4)
    for j in range(p - 1):
        lhs, rhs = pairing_sides(ctx, j)
        assert lhs.e == 0
        assert check_gauss_pairing(ctx, j)


def test_pairing_sign_matters():
    ctx = build_context(7, 4)
    lhs, rhs = pairing_sides(ctx, 1)
    assert lhs.agrees(rhs, 2) and not lhs.agrees(-rhs, 2)


def test_pi_monomial_algebra():
    ctx = build_context(7, 4)
    pi = PiMonomial(7, 1, ZpScaled.from_int(7, 4, 1))
    six = pi
    for _ in range(5):
        six = six * pi
    # pi^6 = -7
    assert six.e == 0 and six.u.agrees(-7, 4)
    with pytest.raises(ClassMismatch):
        pi + PiMonomial.scalar(ctx, 1)
    assert (pi + PiMonomial.zero(ctx)).e == 1


@pytest.mark.parametrize("p,n", [(7, 1), (7, 2), (13, 1), (11, 2), (31, 1)])
def test_c_summands_share_one_pi_class(p, n):
    ctx = build_context(p, n + 4)
    w = teichmuller(ctx, 2)
    assert all(c_summand(ctx, n, j, w).e == (p - 1) // 2 for j in range(p - 1))
    for x in range(1, p):
        assert big_c(ctx, n, x).e == (p - 1) // 2


def test_prop31_examples():
    ctx = build_context(7, 5)
    lhs, rhs, r = prop31_sides(ctx, 1, 1)
    assert r == 2 and lhs.agrees(rhs, 3)
    assert check_prop31(build_context(7, 6), 2, 1)
    ctx5 = build_context(5, 5)
    assert check_prop31(ctx5, 1, 3)
    assert prop31_sides(ctx5, 1, 3)[2] == f_polynomial(ctx5, 1, 3).r


def test_prop31_negative_control():
    # the identity pins r down: using r+1 must fail
    ctx = build_context(7, 5)
    lhs, rhs, r = prop31_sides(ctx, 1, 1)
    wrong = gauss_phi(ctx) * ZpScaled.from_int(7, 5, (r + 1) * 7 * 6)
    assert not lhs.agrees(wrong, 3)


def test_prop32_examples():
    assert check_prop32(build_context(7, 5), 1, 1)
    ctx = build_context(13, 5)
    assert all(check_prop32(ctx, 1, x) for x in range(1, 13))
    assert check_prop32(build_context(7, 6), 2, 3)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_bt_bridge_in_complex_numbers(p):
    # B_t = sum_chi g(chi^3) g(phi chi-bar) g(chi-bar)^2 chi-bar(-27t) equals
    # (p-1) g(phi) (1 + p G(t)) with G the recognized 2G2 value
    ctx = build_context(p, 3)
    phi = quadratic(ctx)
    g_phi = gauss_complex(ctx, phi)
    gs = {a: gauss_complex(ctx, Character(ctx, a)) for a in range(p - 1)}
    for t in range(1, p):
        bt = 0j
        for a in range(p - 1):
            chi = Character(ctx, a)
            bt += gs[(3 * a) % (p - 1)] * gs[(phi.a - a) % (p - 1)] * gs[-a % (p - 1)] ** 2 * chi.conj().value_complex(-27 * t)
        G = g_family(ctx, 1, t).as_fraction()
        assert G is not None
        assert abs(bt - (p - 1) * g_phi * (1 + p * float(G))) < 1e-6 * p**2


def test_hasse_davenport_padic_examples():
    assert check_hasse_davenport_padic(build_context(7, 4), 1, 3)
    assert check_hasse_davenport_padic(build_context(7, 4), 2, 1)
    assert check_hasse_davenport_padic(build_context(13, 4), 3, 2)


@pytest.mark.parametrize("p", [5, 7, 13, 19, 31])
def test_hasse_davenport_padic_grid(p):
    ctx = build_context(p, 4)
    for m in range(1, 7):
        if (p - 1) % m == 0:
            assert all(check_hasse_davenport_padic(ctx, m, b) for b in range(p - 1))
