#-*-coding:utf-8-*-
# Exact integer and rational arithmetic shared by all other modules: generalized
#+binomials, least residues, p-adic orders, Legendre symbols, Fermat quotients
#+and the reduction of p-integral rationals modulo a prime power.
# Nothing here ever touches a float.

# ==== Importations
from __future__ import print_function
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import check_input, NonUnit, NonUnitDenominator

# ==== The INFINITE order
@functools.total_ordering
class _Infinite(object):
    """The p-adic order of zero. Compares greater than every integer."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_Infinite, cls).__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash('INFINITE')

    def __repr__(self):
        return 'INFINITE'

    __str__ = __repr__

INFINITE = _Infinite()

# ==== Primes
def is_prime(p):
    """Deterministic primality test (sympy.isprime is exact below 2**64)"""
    return isinstance(p, int) and sympy.isprime(p)

def primes_between(lo, hi):
    """List of the primes p with lo <= p <= hi, in increasing order"""
    return [int(q) for q in sympy.primerange(lo, hi + 1)]

@dataclass(frozen=True)
class PrimePower(object):
    """The modulus p^a of a generalized Fleck quotient.

    Args:
    - p (int): a prime
    - a (int): the exponent, a >= 1"""
    p: int
    a: int = 1

    def __post_init__(self):
        check_input(is_prime(self.p), self.p, "a prime", 'p')
        check_input(isinstance(self.a, int) and self.a >= 1, self.a, "an integer >= 1", 'a')

    @property
    def modulus(self):
        return self.p**self.a

    @property
    def totient(self):
        return self.p**(self.a - 1) * (self.p - 1)

    @property
    def lower(self):
        """p^(a-1), the threshold of the Weisman bound"""
        return self.p**(self.a - 1)

    def __str__(self):
        return "{}^{}".format(self.p, self.a)

# ==== Integer helpers
def sign(k):
    """(-1)**k as an int, for any integer k"""
    return -1 if k % 2 else 1

def binomial(n, k):
    """Generalized binomial coefficient with an integer upper argument.

    Returns 0 when k < 0. For n < 0 uses binom(n, k) = (-1)^k binom(k-n-1, k)."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return sign(k) * math.comb(k - n - 1, k)

def least_residue(a, m):
    """The least nonnegative residue {a}_m"""
    check_input(m >= 1, m, "a positive integer", 'm')
    return a % m

def p_adic_order(x, p):
    """Largest e with p^e | x, or INFINITE when x == 0"""
    check_input(p >= 2, p, "a prime", 'p')
    if x == 0:
        return INFINITE
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e

def legendre(a, p):
    """Legendre symbol (a/p) by Euler's criterion"""
    check_input(p > 2 and is_prime(p), p, "an odd prime", 'p')
    e = pow(a % p, (p - 1) // 2, p)
    return -1 if e == p - 1 else e

def fermat_quotient(a, p):
    """q_p(a) = (a^(p-1) - 1)/p, an integer for p not dividing a"""
    check_input(is_prime(p), p, "a prime", 'p')
    if a % p == 0:
        raise NonUnit("q_p(a) is not defined: p={} divides a={}".format(p, a))
    return (a**(p - 1) - 1) // p

# ==== Rationals
def rational_mod(x, m):
    """Least residue of the rational x modulo m, for a denominator prime to m.

    Args:
    - x (int or Fraction): the value to reduce
    - m (int): a modulus >= 1

    Returns:
    - an int in [0, m)"""
    x = Fraction(x)
    den = x.denominator
    if math.gcd(den, m) != 1:
        raise NonUnitDenominator("{} cannot be reduced mod {}".format(x, m))
    if m == 1:
        return 0
    return x.numerator * pow(den, -1, m) % m

def rational_mod_p(x, p):
    """Least residue of a p-integral rational modulo the prime p"""
    return rational_mod(x, p)

def inverse_mod(a, m):
    """Inverse of a unit a modulo m"""
    return rational_mod(Fraction(1, a), m)
