"""Property suites; run alone with ``pytest tests/test_properties.py``."""
from hypothesis import assume, given
from hypothesis import strategies as st
from property_checks import gamma_laws, root_count_agrees, teichmuller_laws, ultrametric_laws
from sympy import primerange

PRIMES = st.sampled_from(list(primerange(5, 32)))


@given(PRIMES, st.integers(2, 5), st.integers(1, 10**9), st.integers(1, 10**9))
def test_teichmuller(p, K, a, b):
    assume(a % p and b % p)
    assert teichmuller_laws(p, K, a, b)


@given(PRIMES, st.integers(2, 4), st.integers(0, 10**7), st.integers(1, 4))
def test_gamma(p, K, m, k):
    assert gamma_laws(p, K, m, k)


@given(PRIMES, st.integers(2, 6), st.integers(-10**12, 10**12), st.integers(-10**12, 10**12))
def test_ultrametric(p, K, a, b):
    assert ultrametric_laws(p, K, a, b)


@given(PRIMES.flatmap(lambda p: st.tuples(st.just(p), st.lists(st.integers(0, p - 1), min_size=3, max_size=3), st.integers(1, p - 1))))
def test_root_count_oracle(case):
    p, low, lead = case
    assert root_count_agrees(p, low + [lead])
