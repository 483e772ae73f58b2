#-*-coding:utf-8-*-
# Direct evaluation of the alternating binomial sums
#     C_m(n,r) = sum_{k = r mod m} binom(n,k) (-1)^k
#+and of the (generalized) Fleck quotients built from them, plus the mod-p
#+recurrence that steps n by p-1.
# This is the brute-force layer: every closed form and every congruence of
#+the package is checked against the values computed here.

# ==== Importations
from __future__ import print_function
import math
from dataclasses import dataclass

import numpy as np

from . import settings
from .errors import check_input, IntegralityViolation, ResourceLimit
from .exactarith import PrimePower, inverse_mod

# ==== Data types
@dataclass(frozen=True)
class FleckQuery(object):
    """The triple (p^a, n, r) a Fleck quotient is evaluated at"""
    pp: PrimePower
    n: int
    r: int

@dataclass(frozen=True)
class FleckValue(object):
    """An exact (generalized) Fleck quotient.

    Args:
    - query (FleckQuery): where the quotient was evaluated
    - value (int): the quotient F
    - raw_sum (int): C before normalization
    - floor_exponent (int): the exponent e such that C = (-p)^e (F - bracket)
    - bracket_correction (int): 1 if the [[n < p^(a-1)]] term was added, else 0"""
    query: FleckQuery
    value: int
    raw_sum: int
    floor_exponent: int
    bracket_correction: int

    def residue(self, m=None):
        """F mod m, by default mod p"""
        if m is None:
            m = self.query.pp.p
        return self.value % m

# ==== Alternating sums
def _check_size(n, max_n):
    limit = settings.max_n() if max_n is None else max_n
    if n > limit:
        raise ResourceLimit("n={} exceeds the direct-summation bound {} (set {})".format(
            n, limit, settings.ENV_MAX_N))

def alternating_sum(m, n, r, max_n=None):
    """C_m(n,r), summed exactly over k = r mod m, 0 <= k <= n.

    Consecutive binomials of the class are obtained from each other by a
    multiply/divide update.

    Args:
    - m (int): the modulus of the residue class, m >= 1
    - n (int): the upper argument, n >= 0
    - r (int): any integer, only r mod m matters
    - max_n (int): overrides the configured ResourceLimit bound

    Returns:
    - the exact integer C_m(n,r)"""
    check_input(m >= 1, m, "a positive integer", 'm')
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    _check_size(n, max_n)

    k = r % m
    if k > n:
        return 0
    b = math.comb(n, k)
    total = 0
    while True:
        total += -b if k % 2 else b
        nk = k + m
        if nk > n:
            break
        b = b * math.prod(range(n - nk + 1, n - k + 1)) // math.prod(range(k + 1, nk + 1))
        k = nk
    return total

def alternating_row(m, n, max_n=None):
    """[C_m(n,0), ..., C_m(n,m-1)] computed in a single pass over k"""
    check_input(m >= 1, m, "a positive integer", 'm')
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    _check_size(n, max_n)

    row = [0]*m
    b = 1
    for k in range(n + 1):
        row[k % m] += -b if k % 2 else b
        b = b * (n - k) // (k + 1)
    return row

# ==== Normalization
def fleck_floor(p, n):
    """The exponent floor((n-1)/(p-1)); -1 at n = 0"""
    return (n - 1) // (p - 1)

def weisman_floor(pp, n):
    """The exponent floor((n - p^(a-1))/phi(p^a)), possibly negative"""
    return (n - pp.lower) // pp.totient

def _normalize(raw, p, e, bracket, query):
    if e >= 0:
        q, rem = divmod(raw, (-p)**e)
        if rem != 0:
            raise IntegralityViolation(
                "C={} is not divisible by (-{})^{} at p^a={}, n={}, r={}".format(
                    raw, p, e, query.pp, query.n, query.r))
        value = q + bracket
    else:
        value = raw * (-p)**(-e) + bracket
    return FleckValue(query, value, raw, e, bracket)

def generalized_fleck(pp, n, r, max_n=None):
    """The generalized Fleck quotient
    F_{p^a}(n,r) = (-p)^(-floor((n-p^(a-1))/phi(p^a))) C_{p^a}(n,r) + [[n < p^(a-1)]]

    Args:
    - pp (PrimePower): the modulus p^a
    - n (int): n >= 0
    - r (int): any integer

    Returns:
    - a FleckValue. Raises IntegralityViolation if the division is not exact."""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    raw = alternating_sum(pp.modulus, n, r, max_n=max_n)
    return _normalize(raw, pp.p, weisman_floor(pp, n), int(n < pp.lower),
                      FleckQuery(pp, n, r))

def fleck_quotient(p, n, r, max_n=None):
    """The Fleck quotient F_p(n,r) = (-p)^(-floor((n-1)/(p-1))) C_p(n,r) + [[n=0]]"""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    pp = PrimePower(p, 1)
    raw = alternating_sum(p, n, r, max_n=max_n)
    return _normalize(raw, p, fleck_floor(p, n), int(n == 0), FleckQuery(pp, n, r))

def generalized_fleck_row(pp, n, max_n=None):
    """The list of FleckValue for r = 0, ..., p^a - 1"""
    check_input(n >= 0, n, "a nonnegative integer", 'n')
    row = alternating_row(pp.modulus, n, max_n=max_n)
    e = weisman_floor(pp, n)
    bracket = int(n < pp.lower)
    return [_normalize(c, pp.p, e, bracket, FleckQuery(pp, n, r)) for (r, c) in enumerate(row)]

# ==== Mod-p recurrence
def _inverses(p):
    return [0] + [inverse_mod(j, p) for j in range(1, p)]

def recurrence_mod_p(p, n, r, lower):
    """F_p(n,r) mod p from the residues of F_p(n-p+1, .) via
        F_p(n,r) = - sum_{j=1}^{p-1} (1/j) sum_{i=0}^{j-1} F_p(n-p+1, r-i)  (mod p)

    Args:
    - p (int): a prime
    - n (int): n >= p
    - r (int): any integer
    - lower (sequence or dict): lower[s] = F_p(n-p+1, s) mod p, for s in [0, p)

    Returns:
    - an int in [0, p)"""
    check_input(n >= p, n, "an integer >= p={}".format(p), 'n')
    inv = _inverses(p)
    total = 0
    inner = 0
    for j in range(1, p):
        inner += lower[(r - (j - 1)) % p]
        total += inv[j] * inner
    return (-total) % p

def recurrence_row(p, lower_row):
    """The recurrence applied to a whole row: lower_row holds F_p(n-p+1, r) mod p
    for r in [0, p) and the result holds F_p(n, r) mod p."""
    lower_row = np.asarray(lower_row, dtype=np.int64) % p
    inv = _inverses(p)
    partial = np.zeros(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for j in range(1, p):
        partial = (partial + np.roll(lower_row, j - 1)) % p
        acc = (acc + inv[j] * partial) % p
    return (-acc) % p

def recurrence_table(p, n_max, max_n=None):
    """numpy table T[n, r] = F_p(n, r) mod p for 0 <= n <= n_max, where only
    the rows n < p are summed directly and the others come from the recurrence."""
    check_input(n_max >= 0, n_max, "a nonnegative integer", 'n_max')
    pp = PrimePower(p, 1)
    table = np.zeros((n_max + 1, p), dtype=np.int64)
    for n in range(min(p, n_max + 1)):
        table[n] = [v.residue() for v in generalized_fleck_row(pp, n, max_n=max_n)]
    for n in range(p, n_max + 1):
        table[n] = recurrence_row(p, table[n - p + 1])
    return table

# ==== Residue tables
def residue_table(p, n_max, a=1, max_n=None):
    """numpy table T[n, r] = F_{p^a}(n, r) mod p for 0 <= n <= n_max and
    0 <= r < p^a, built row by row from C_m(n+1,r) = C_m(n,r) - C_m(n,r-1)."""
    check_input(n_max >= 0, n_max, "a nonnegative integer", 'n_max')
    _check_size(n_max, max_n)
    pp = PrimePower(p, a)
    m = pp.modulus
    table = np.zeros((n_max + 1, m), dtype=np.int64)
    row = [1] + [0]*(m - 1)
    for n in range(n_max + 1):
        if n > 0:
            row = [row[r] - row[r - 1] for r in range(m)]
        e = weisman_floor(pp, n)
        bracket = int(n < pp.lower)
        table[n] = [_normalize(c, p, e, bracket, FleckQuery(pp, n, r)).value % p
                    for (r, c) in enumerate(row)]
    return table
