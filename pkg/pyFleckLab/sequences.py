#-*-coding:utf-8-*-
# Stirling numbers of both kinds, falling factorials, Bernoulli numbers and
#+polynomials, and higher-order Bernoulli numbers and polynomials, all exact.

# ==== Importations
from __future__ import print_function
import functools
import math
import threading
from fractions import Fraction

from . import settings
from .errors import check_input, IntegralityViolation, ResourceLimit
from .exactarith import is_prime, rational_mod_p, sign

# ==== Polynomials
class Polynomial(object):
    """A polynomial with Fraction coefficients, stored in ascending degree"""

    def __init__(self, coefficients):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self):
        """-1 for the zero polynomial"""
        return len(self.coefficients) - 1

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return "Polynomial({})".format([str(c) for c in self.coefficients])

# ==== Falling factorials and Stirling numbers
def falling_factorial(x, k):
    """(x)_k = x(x-1)...(x-k+1), with (x)_0 = 1"""
    check_input(k >= 0, k, "a nonnegative integer", 'k')
    acc = Fraction(1)
    for i in range(k):
        acc *= (x - i)
    return acc

@functools.lru_cache(maxsize=None)
def stirling2(n, k):
    """Stirling number of the second kind by the explicit formula
        S(n,k) = (1/k!) sum_j binom(k,j) (-1)^(k-j) j^n"""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    check_input(k >= 0, k, "a nonnegative integer", 'k')
    if k > n:
        return 0
    total = sum(math.comb(k, j) * sign(k - j) * j**n for j in range(k + 1))
    q, rem = divmod(total, math.factorial(k))
    if rem != 0:
        raise IntegralityViolation("S({},{}) sum {} is not divisible by {}!".format(n, k, total, k))
    return q

def stirling2_bar(n, k):
    """k! S(n,k) / n!, the coefficient of x^n in (e^x - 1)^k"""
    return Fraction(math.factorial(k) * stirling2(n, k), math.factorial(n))

@functools.lru_cache(maxsize=None)
def _falling_coefficients(m):
    coeffs = [1]
    for i in range(m):
        nxt = [0]*(len(coeffs) + 1)
        for (j, c) in enumerate(coeffs):
            nxt[j + 1] += c
            nxt[j] -= i * c
        coeffs = nxt
    return tuple(coeffs)

def stirling1_unsigned(m, k):
    """s(m,k) >= 0 with (x)_m = sum_k (-1)^(m-k) s(m,k) x^k"""
    check_input(m >= 0, m, "a nonnegative integer", 'm')
    check_input(k >= 0, k, "a nonnegative integer", 'k')
    if k > m:
        return 0
    return abs(_falling_coefficients(m)[k])

# ==== Bernoulli numbers
class BernoulliCache(object):
    """Append-only memo of B_0, B_1, ... computed with the recurrence
        sum_{k=0}^{l} binom(l+1,k) B_k = 0
    Readers always see a consistent prefix; extension is done under a lock."""

    def __init__(self, ceiling=None):
        self._ceiling = ceiling
        self._values = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def ceiling(self):
        return settings.bernoulli_ceiling() if self._ceiling is None else self._ceiling

    def __len__(self):
        return len(self._values)

    def get(self, n):
        check_input(n >= 0, n, "a nonnegative integer", 'n')
        if n > self.ceiling:
            raise ResourceLimit("B_{} is above the Bernoulli ceiling {} (set {})".format(
                n, self.ceiling, settings.ENV_BERNOULLI_MAX))
        if n >= len(self._values):
            with self._lock:
                self._extend(n)
        return self._values[n]

    def _extend(self, n):
        vals = self._values
        for l in range(len(vals), n + 1):
            if l >= 3 and l % 2 == 1:
                vals.append(Fraction(0))
                continue
            acc = sum(math.comb(l + 1, k) * vals[k] for k in range(l))
            vals.append(-acc / (l + 1))

BERNOULLI = BernoulliCache()

def bernoulli_number(n):
    """B_n, with B_1 = -1/2"""
    return BERNOULLI.get(n)

def bernoulli_poly(n):
    """B_n(t) = sum_k binom(n,k) B_k t^(n-k)"""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    return Polynomial([math.comb(n, j) * bernoulli_number(n - j) for j in range(n + 1)])

# ==== Higher-order Bernoulli numbers
@functools.lru_cache(maxsize=None)
def _bernoulli_series(degree):
    return tuple(bernoulli_number(k) / math.factorial(k) for k in range(degree + 1))

@functools.lru_cache(maxsize=None)
def _series_power(m, degree):
    """Coefficients of (x/(e^x - 1))^m truncated at x^degree"""
    acc = [Fraction(1)] + [Fraction(0)]*degree
    base = _bernoulli_series(degree)
    for _ in range(m):
        acc = [sum(acc[i] * base[k - i] for i in range(k + 1)) for k in range(degree + 1)]
    return tuple(acc)

def higher_bernoulli_number(n, m):
    """B_n^(m) = B_n^(m)(0), the m-th order Bernoulli number"""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    check_input(m >= 0, m, "a nonnegative integer", 'm')
    return math.factorial(n) * _series_power(m, n)[n]

def higher_bernoulli_poly(n, m):
    """B_n^(m)(t) = sum_k binom(n,k) B_k^(m) t^(n-k) as a Polynomial"""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    check_input(m >= 0, m, "a nonnegative integer", 'm')
    series = _series_power(m, n)
    return Polynomial([math.comb(n, j) * math.factorial(n - j) * series[n - j]
                       for j in range(n + 1)])

def higher_bernoulli_poly_eval(n, m, t):
    """B_n^(m)(t) evaluated exactly at the rational t"""
    return higher_bernoulli_poly(n, m)(Fraction(t))

def higher_bernoulli_mod_p(n, m, t, p):
    """B_n^(m)(t) mod p, which is p-integral for n <= p-2 and integer t"""
    check_input(is_prime(p), p, "a prime", 'p')
    check_input(0 <= n <= p - 2, n, "an integer in [0, p-2] (p={})".format(p), 'n')
    return rational_mod_p(higher_bernoulli_poly_eval(n, m, t), p)
