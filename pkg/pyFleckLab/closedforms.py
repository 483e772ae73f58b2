#-*-coding:utf-8-*-
# Closed-form evaluators of Fleck quotients modulo p.
#
# Every evaluator first computes an exact rational, then reduces it once with
#+rational_mod_p, so a subexpression that is not p-integral cannot slip through
#+silently: it raises NonUnitDenominator instead.
#
# Notation used throughout:
#   n0 = {n}_p, n1 = {n0 - n}_{p-1}, n* = {-n}_{p-1}
#   and {a}_m is the least nonnegative residue of a mod m.

# ==== Importations
from __future__ import print_function
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import check_input, ConsistencyViolation
from .exactarith import binomial, fermat_quotient, rational_mod_p, sign
from .sequences import (bernoulli_poly, falling_factorial, higher_bernoulli_number,
                        higher_bernoulli_poly_eval, stirling2_bar)

# ==== Branch selection
class Branch(enum.Enum):
    LE = 'n0<=n1'
    GT_ZERO = 'n0>n1=0'
    GT_POS = 'n0>n1>0'

@dataclass(frozen=True)
class BranchTag(object):
    which: Branch
    n0: int
    n1: int

def star(p, n):
    """n* = {-n}_{p-1}"""
    return (-n) % (p - 1)

def branch_of(p, n):
    """The digit pair (n0, n1) of n and the branch it falls in"""
    n0 = n % p
    n1 = (n0 - n) % (p - 1)
    if n0 <= n1:
        which = Branch.LE
    elif n1 == 0:
        which = Branch.GT_ZERO
    else:
        which = Branch.GT_POS
    return BranchTag(which, n0, n1)

def _quotient_sum(p, n0, n1, r):
    """sum_{k=0}^{n0} binom(n0,k) (-1)^k (k-r)^n1 q_p(k-r) over the k with p
    not dividing k-r, for r already reduced to [0, p)."""
    return sum(math.comb(n0, k) * sign(k) * (k - r)**n1 * fermat_quotient(k - r, p)
               for k in range(n0 + 1) if (k - r) % p != 0)

# ==== Digit form
def fleck_mod_p_by_digits(p, n, r):
    """F_p(n,r) mod p from the base-p digit pair (n0, n1) of n.

    Args:
    - p (int): a prime
    - n (int): n >= 0
    - r (int): any integer

    Returns:
    - (residue, BranchTag)"""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    tag = branch_of(p, n)
    n0, n1 = tag.n0, tag.n1
    rr = r % p

    if tag.which is Branch.LE:
        s = sum(math.comb(n0, k) * sign(k) * (k - rr)**n1 for k in range(n0 + 1))
        val = Fraction(sign(n1) * s, math.factorial(n1))
    elif tag.which is Branch.GT_ZERO:
        val = Fraction(sign(rr) * math.comb(n0, rr))
    else:
        val = Fraction(sign(n1 - 1) * _quotient_sum(p, n0, n1, rr), math.factorial(n1 - 1))
    return rational_mod_p(val, p), tag

# ==== Series forms
def stirling_forms(p, n, r, m):
    """The three equal expressions of (-1)^n F_p(n,r) mod p for an order m >= 0
    with m = n (mod p), each as an exact Fraction:
        sum_k Sbar(n*-k+m, m) (-r)^k/k!
        sum_k Sbar(m+n*, m+k) binom(-r, k)
        sum_k binom(m,k) (-1)^(m-k) (k-r)^(m+n*)/(m+n*)!"""
    check_input(m >= 0, m, "a nonnegative integer", 'm')
    ns = star(p, n)
    first = sum((stirling2_bar(ns - k + m, m) * Fraction((-r)**k, math.factorial(k))
                 for k in range(ns + 1)), Fraction(0))
    second = sum((stirling2_bar(m + ns, m + k) * binomial(-r, k) for k in range(ns + 1)),
                 Fraction(0))
    third = sum((math.comb(m, k) * sign(m - k) * Fraction((k - r)**(m + ns), math.factorial(m + ns))
                 for k in range(m + 1)), Fraction(0))
    return first, second, third

def _bernoulli_form(p, n, r, m, wilson):
    ns = star(p, n)
    value = higher_bernoulli_poly_eval(ns, -m, -r)
    if wilson:
        return -math.factorial(p - 1 - ns) * value
    return sign(ns) * value / math.factorial(ns)

def fleck_mod_p_by_series(p, n, r, m=None, wilson=False):
    """F_p(n,r) mod p through an order m = n (mod p).

    For m >= 0 the Stirling form is used (its three expressions are required to
    agree exactly); for m <= 0 the higher-order Bernoulli form
        (-1)^{n*}/n*! B_{n*}^{(-m)}(-r),  or  -(p-1-n*)! B_{n*}^{(-m)}(-r) if wilson.
    At m = 0 both are evaluated and must agree.

    Args:
    - m (int): defaults to {n}_p

    Returns:
    - an int in [0, p)"""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    if m is None:
        m = n % p
    check_input((m - n) % p == 0, m, "congruent to n={} mod p={}".format(n, p), 'm')

    residues = []
    if m >= 0:
        forms = stirling_forms(p, n, r, m)
        if not forms[0] == forms[1] == forms[2]:
            raise ConsistencyViolation("Stirling forms disagree at p={}, n={}, r={}, m={}: {}".format(
                p, n, r, m, [str(f) for f in forms]))
        residues.append(rational_mod_p(sign(n) * forms[0], p))
    if m <= 0:
        residues.append(rational_mod_p(_bernoulli_form(p, n, r, m, wilson), p))
    if len(set(residues)) != 1:
        raise ConsistencyViolation("Stirling and Bernoulli forms disagree at p={}, n={}, r={}: {}".format(
            p, n, r, residues))
    return residues[0]

def fleck_mod_p_at_multiple(p, n, r):
    """F_p(pn, r) = r^{n*}/n*! (mod p)"""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    ns = star(p, n)
    return rational_mod_p(Fraction(r**ns, math.factorial(ns)), p)

# ==== Higher-order Bernoulli values from digits
def digits_index(p, n0, n1):
    """(degree, order) of the higher-order Bernoulli polynomial whose value at -r
    is determined by the digit pair (n0, n1)"""
    degree = n1 - n0 if n0 <= n1 else p - n0 + n1 - 1
    return degree, p - n0

def higher_bernoulli_by_digits(p, n0, n1, r):
    """B_d^{(p-n0)}(-r) mod p, with d = n1-n0 when n0 <= n1 and d = p-n0+n1-1
    otherwise, from a finite sum over k <= n0.

    Args:
    - n0 (int): 0 <= n0 <= p-1
    - n1 (int): 0 <= n1 <= p-2"""
    check_input(0 <= n0 <= p - 1, n0, "in [0, p-1] (p={})".format(p), 'n0')
    check_input(0 <= n1 <= p - 2, n1, "in [0, p-2] (p={})".format(p), 'n1')
    rr = r % p
    if n0 <= n1:
        s = sum(math.comb(n0, k) * sign(n0 - k) * (k - rr)**n1 for k in range(n0 + 1))
        val = s / falling_factorial(n1, n0)
    elif n1 == 0:
        val = Fraction(sign(rr - 1) * math.comb(n0, rr), math.factorial(n0))
    else:
        val = Fraction(sign(n1) * _quotient_sum(p, n0, n1, rr),
                       math.factorial(n0 - n1) * math.factorial(n1 - 1))
    return rational_mod_p(val, p)

# ==== Specializations
def fleck_mod_p_specialized(p, n, r=0, shifted=False, cross_check=False):
    """Two specializations of the series form.

    shifted=False: F_p(n, 0) = (-1)^n Sbar(n*+{n}_p, {n}_p) (mod p); r must be 0 mod p.
    shifted=True:  F_p(pn+p-1, r) = (-1)^n B_{n*}(-r)/n*! (mod p).

    With cross_check the second expression of each congruence,
    B_{n*}^{(m)}/n*! with m+n = 0 (mod p), respectively -(p-1-n*)! B_{n*}(r+1),
    is reduced as well and compared."""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    ns = star(p, n)
    if not shifted:
        check_input(r % p == 0, r, "0 mod p when shifted=False", 'r')
        n0 = n % p
        res = rational_mod_p(sign(n) * stirling2_bar(ns + n0, n0), p)
        if cross_check:
            other = rational_mod_p(sign(n) * higher_bernoulli_number(ns, (-n) % p)
                                   / math.factorial(ns), p)
            _agree(res, other, p, n, r)
        return res

    res = rational_mod_p(sign(n) * bernoulli_poly(ns)(-r) / math.factorial(ns), p)
    if cross_check:
        other = rational_mod_p(-sign(n) * math.factorial(p - 1 - ns) * bernoulli_poly(ns)(r + 1), p)
        _agree(res, other, p, n, r)
    return res

def _agree(a, b, p, n, r):
    if a != b:
        raise ConsistencyViolation("specialized forms disagree at p={}, n={}, r={}: {} != {}".format(
            p, n, r, a, b))

def fleck_mod_p_before_double(p, n, r):
    """F_p(pn-2, r) mod p for odd p and 3 <= n <= p, as
        -n! ( B_{p-n+1}(-r)/(n-1) + (r+1) B_{p-n}(-r)/n )"""
    check_input(p > 2, p, "an odd prime", 'p')
    check_input(3 <= n <= p, n, "in [3, p] (p={})".format(p), 'n')
    fact = math.factorial(n)
    val = -(Fraction(fact, n - 1) * bernoulli_poly(p - n + 1)(-r)
            + Fraction(fact, n) * (r + 1) * bernoulli_poly(p - n)(-r))
    return rational_mod_p(val, p)

# ==== Expansion in r for prime powers
def expansion_depth(pp, n):
    """The least d >= 0 with n + d = p^(a-1) - 1 (mod phi(p^a))"""
    return (pp.lower - 1 - n) % pp.totient

def generalized_fleck_by_expansion(pp, n, r, zero_column):
    """F_{p^a}(n, r) mod p from the residue class r = 0 only:
        sum_{k=0}^{d} binom(r+k-1, k) F_{p^a}(n+k, 0)   (mod p)

    Args:
    - pp (PrimePower): the modulus p^a
    - n (int): n >= p^(a-1)
    - zero_column (sequence): F_{p^a}(n+k, 0) (or its residue) for k = 0..d"""
    check_input(n >= pp.lower, n, "an integer >= p^(a-1)={}".format(pp.lower), 'n')
    d = expansion_depth(pp, n)
    check_input(len(zero_column) == d + 1, len(zero_column),
                "d+1={} for p^a={}, n={}".format(d + 1, pp, n), 'len(zero_column)')
    return sum(binomial(r + k - 1, k) * zero_column[k] for k in range(d + 1)) % pp.p
