import pytest
import sympy
from hypothesis import given, strategies as st

from mindisc.arith import (
    Factorization,
    divisors_from,
    factorize,
    is_prime,
    max_power_unit,
    valuation,
)
from mindisc.errors import DomainError

nonzero = st.integers(-10**12, 10**12).filter(bool)


@pytest.mark.parametrize(
    "n, sign, factors",
    [(12, 1, {2: 2, 3: 1}), (-432, -1, {2: 4, 3: 3}), (1, 1, {}), (-1, -1, {})],
)
def test_factorize_examples(n, sign, factors):
    assert factorize(n) == Factorization(sign, factors)


def test_factorize_zero():
    with pytest.raises(DomainError, match="zero has no factorization"):
        factorize(0)


def test_factorize_large_cofactors():
    p, q = sympy.nextprime(10**12), sympy.nextprime(10**13)
    fac = factorize(-(2**5) * p * q**2)
    assert fac.sign == -1
    assert fac.factors == {2: 5, p: 1, q: 2}


def test_factorize_big_prime_power():
    p = sympy.nextprime(10**30)
    assert factorize(p**3 * 7).factors == {7: 1, p: 3}


@given(nonzero)
def test_factorize_reconstructs(n):
    fac = factorize(n)
    assert fac.value() == n
    assert all(sympy.isprime(p) for p in fac.factors)
    assert all(e >= 1 for e in fac.factors.values())


def test_is_prime_matches_sympy():
    assert [n for n in range(5000) if is_prime(n)] == list(sympy.primerange(0, 5000))
    # strong pseudoprimes to several bases
    for n in (3215031751, 2152302898747, 3474749660383, 341550071728321):
        assert not is_prime(n)
    big = sympy.nextprime(10**40)
    assert is_prime(big)
    assert not is_prime(big * sympy.nextprime(big))


@pytest.mark.parametrize("n, p, v", [(48, 2, 4), (10, 3, 0), (-432, 3, 3), (2**200, 2, 200)])
def test_valuation_examples(n, p, v):
    assert valuation(n, p) == v


def test_valuation_zero_is_an_error():
    with pytest.raises(DomainError):
        valuation(0, 2)


@given(nonzero, nonzero, st.sampled_from([2, 3, 5, 7, 11]))
def test_valuation_additive(a, b, p):
    assert valuation(a * b, p) == valuation(a, p) + valuation(b, p)


@pytest.mark.parametrize("n, k, u", [(2**36, 36, 2), (2**13 * 5, 12, 2), (7, 12, 1), (-(6**8), 4, 36)])
def test_max_power_unit_examples(n, k, u):
    assert max_power_unit(n, k) == u


@given(nonzero, st.integers(1, 6))
def test_max_power_unit_is_largest(n, k):
    u = max_power_unit(n, k)
    assert n % u**k == 0
    for p in factorize(n).factors:
        assert n % (p * u) ** k != 0


def test_divisors():
    assert divisors_from({2: 2, 3: 1}) == [1, 2, 3, 4, 6, 12]
    assert divisors_from({}) == [1]
