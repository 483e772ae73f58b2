## Tests for the combinatorial sequences
## Stirling numbers, Bernoulli numbers and polynomials, higher-order Bernoulli numbers

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy.functions.combinatorial.numbers import stirling

import oracles
from pyFleckLab import settings
from pyFleckLab.errors import PreconditionViolation, ResourceLimit
from pyFleckLab.exactarith import binomial
from pyFleckLab.sequences import (BernoulliCache, Polynomial, bernoulli_number, bernoulli_poly,
                                  falling_factorial, higher_bernoulli_mod_p,
                                  higher_bernoulli_number, higher_bernoulli_poly,
                                  higher_bernoulli_poly_eval, stirling1_unsigned, stirling2,
                                  stirling2_bar)

## ==== Polynomial
def test_polynomial_basics():
    p = Polynomial([1, 0, 3, 0, 0])
    assert p.degree == 2
    assert p(2) == 13
    assert Polynomial([]).degree == -1
    assert Polynomial([0, 0]) == Polynomial([])
    assert Polynomial([Fraction(1, 2)]) == Polynomial([Fraction(2, 4)])

def test_falling_factorial():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(7, 0) == 1
    assert falling_factorial(-2, 2) == 6
    assert falling_factorial(3, 5) == 0

## ==== Stirling numbers
def test_stirling2_examples():
    assert stirling2(0, 0) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(4, 2) == 7
    assert stirling2(10, 3) == 9330
    assert stirling2(2, 5) == 0
    with pytest.raises(PreconditionViolation):
        stirling2(-1, 0)

def test_stirling2_counts_partitions(nmax=7):
    for n in range(nmax + 1):
        for k in range(n + 1):
            assert stirling2(n, k) == oracles.set_partition_count(n, k)

@given(st.integers(min_value=0, max_value=60), st.integers(min_value=0, max_value=60))
def test_stirling2_recurrence(n, k):
    assert stirling2(n, k) == oracles.stirling2_recurrence(n, k)

def test_stirling2_sympy(nmax=30):
    for n in range(nmax):
        for k in range(n + 1):
            assert stirling2(n, k) == stirling(n, k)

def test_powers_in_falling_factorials():
    """x^n = sum_k S(n,k) (x)_k"""
    for n in range(13):
        for x in range(-6, 7):
            assert sum(stirling2(n, k) * falling_factorial(x, k) for k in range(n + 1)) == x**n

@given(st.integers(min_value=1, max_value=10).flatmap(
    lambda k: st.tuples(st.just(k), st.lists(st.integers(min_value=-50, max_value=50), max_size=k))))
def test_alternating_differences_kill_low_degree(case):
    """sum_j binom(k,j) (-1)^j P(j) = 0 when deg P < k"""
    k, coeffs = case
    poly = Polynomial(coeffs)
    assert sum(binomial(k, j) * (-1)**j * poly(j) for j in range(k + 1)) == 0

def test_stirling2_bar():
    assert stirling2_bar(3, 2) == 1
    assert stirling2_bar(4, 1) == Fraction(1, 24)

def test_stirling1(mmax=25):
    """Coefficients of the falling factorial and the row sum m!"""
    for m in range(mmax):
        coeffs = oracles.falling_coefficients(m)
        for k in range(m + 1):
            assert stirling1_unsigned(m, k) == abs(coeffs[k])
            assert stirling1_unsigned(m, k) == stirling(m, k, kind=1)
        assert sum(stirling1_unsigned(m, k) for k in range(m + 1)) == math.factorial(m)
    assert stirling1_unsigned(4, 2) == 11
    assert stirling1_unsigned(3, 7) == 0

## ==== Bernoulli numbers
def test_bernoulli_examples():
    expected = [Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0), Fraction(-1, 30),
                Fraction(0), Fraction(1, 42)]
    assert [bernoulli_number(n) for n in range(7)] == expected
    assert bernoulli_number(12) == Fraction(-691, 2730)
    assert bernoulli_number(32).numerator % 37 == 0

def test_bernoulli_recurrence_oracle(nmax=60):
    assert [bernoulli_number(n) for n in range(nmax + 1)] == oracles.bernoulli_by_recurrence(nmax)

def test_bernoulli_ceiling(monkeypatch):
    cache = BernoulliCache(ceiling=10)
    assert cache.get(10) == Fraction(5, 66)
    with pytest.raises(ResourceLimit):
        cache.get(11)
    monkeypatch.setenv(settings.ENV_BERNOULLI_MAX, '20')
    with pytest.raises(ResourceLimit):
        BernoulliCache().get(21)

def test_bernoulli_poly():
    assert bernoulli_poly(3) == Polynomial([0, Fraction(1, 2), Fraction(-3, 2), 1])
    assert bernoulli_poly(3)(-1) == -3
    assert bernoulli_poly(0) == Polynomial([1])

@pytest.mark.parametrize("n", range(1, 15))
def test_bernoulli_poly_identities(n):
    """B_n(t+1) - B_n(t) = n t^(n-1) and B_n(1-t) = (-1)^n B_n(t)"""
    b = bernoulli_poly(n)
    for t in (Fraction(-3), Fraction(1, 3), Fraction(5, 2)):
        assert b(t + 1) - b(t) == n * t**(n - 1)
        assert b(1 - t) == (-1)**n * b(t)

## ==== Higher-order Bernoulli numbers
def test_higher_bernoulli_examples():
    assert higher_bernoulli_number(3, 3) == Fraction(-9, 4)
    assert higher_bernoulli_number(0, 4) == 1
    assert higher_bernoulli_number(5, 0) == 0
    for m in range(6):
        assert higher_bernoulli_number(1, m) == Fraction(-m, 2)
        assert higher_bernoulli_number(2, m) == Fraction(m * (3 * m - 1), 12)

def test_higher_bernoulli_order_one(nmax=41):
    for n in range(nmax):
        assert higher_bernoulli_number(n, 1) == bernoulli_number(n)
        assert higher_bernoulli_poly(n, 1) == bernoulli_poly(n)

def test_higher_bernoulli_convolution(nmax=6, mmax=4):
    for n in range(nmax + 1):
        for m in range(1, mmax + 1):
            assert higher_bernoulli_number(n, m) == oracles.higher_bernoulli_by_convolution(n, m)

def test_higher_bernoulli_reflection():
    """B_n^(m)(m-t) = (-1)^n B_n^(m)(t)"""
    for n in range(9):
        for m in range(9):
            for t in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)):
                assert (higher_bernoulli_poly_eval(n, m, m - t)
                        == (-1)**n * higher_bernoulli_poly_eval(n, m, t)), (n, m, t)

@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_higher_bernoulli_difference(m, nmax=10):
    """B_n^(m)(t+1) - B_n^(m)(t) = n B_(n-1)^(m-1)(t)"""
    for n in range(1, nmax):
        for t in (Fraction(0), Fraction(-2), Fraction(3, 7)):
            lhs = higher_bernoulli_poly_eval(n, m, t + 1) - higher_bernoulli_poly_eval(n, m, t)
            assert lhs == n * higher_bernoulli_poly_eval(n - 1, m - 1, t)

def test_higher_bernoulli_mod_p():
    assert higher_bernoulli_mod_p(3, 3, 0, 5) == 4
    assert higher_bernoulli_mod_p(3, 1, -1, 5) == 2
    with pytest.raises(PreconditionViolation):
        higher_bernoulli_mod_p(4, 1, 0, 5)
    with pytest.raises(PreconditionViolation, match="'p'=4"):
        higher_bernoulli_mod_p(1, 1, 0, 4)

if __name__ == '__main__':
    test_stirling2_counts_partitions()
    test_bernoulli_recurrence_oracle()
