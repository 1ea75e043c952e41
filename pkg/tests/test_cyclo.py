import cmath

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import totient

from padic_hypergeom.cyclo import CycloInt, degree

ORDERS = st.sampled_from([4, 6, 10, 12, 30, 42])


def elements(m):
    return st.lists(st.integers(-5, 5), min_size=m, max_size=m).map(lambda c: CycloInt.from_exponent_counts(m, c))


def test_degree_is_totient():
    for m in (1, 2, 3, 4, 6, 12, 20, 42, 156):
        assert degree(m) == int(totient(m))


def test_root_of_unity_relations():
    for m in (5, 7, 12, 42):
        z = CycloInt.monomial(m, 1)
        assert z**m == 1
        assert z ** (m // 2 if m % 2 == 0 else m) != 0
    # sum of all p-th roots of unity vanishes
    assert CycloInt.from_exponents(7, range(7)) == 0
    # zeta_12^6 = -1
    assert CycloInt.monomial(12, 6) == -1


@given(ORDERS.flatmap(lambda m: st.tuples(elements(m), elements(m), elements(m))))
def test_ring_axioms(abc):
    a, b, c = abc
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(ORDERS.flatmap(lambda m: st.tuples(elements(m), elements(m))))
def test_complex_embedding_is_a_homomorphism(ab):
    a, b = ab
    assert cmath.isclose((a * b).to_complex(), a.to_complex() * b.to_complex(), abs_tol=1e-6)
    assert cmath.isclose((a + b).to_complex(), a.to_complex() + b.to_complex(), abs_tol=1e-9)


@given(ORDERS.flatmap(lambda m: st.tuples(st.just(m), elements(m), elements(m))))
def test_galois_is_a_ring_map(mab):
    m, a, b = mab
    k = next(k for k in range(m - 1, 0, -1) if __import__("math").gcd(k, m) == 1)
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)


def test_lift_preserves_values():
    a = CycloInt.from_exponents(6, [1, 2, 2, 5])
    lifted = a.lift(42)
    assert cmath.isclose(lifted.to_complex(), a.to_complex(), abs_tol=1e-9)
    with pytest.raises(ValueError):
        a.lift(10)


def test_large_coefficients_stay_exact():
    a = CycloInt.integer(12, 3**40) + CycloInt.monomial(12, 1, 7)
    sq = a * a
    assert sq == CycloInt.integer(12, 3**80) + CycloInt.monomial(12, 1, 14 * 3**40) + CycloInt.monomial(12, 2, 49)


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        CycloInt.integer(6, 1) + CycloInt.integer(12, 1)


def test_scalar_multiple_overflow_promotes():
    a = CycloInt.monomial(12, 1, 5**20)
    assert (a * 5**20) == CycloInt.monomial(12, 1, 5**40)
