#-*-coding:utf-8-*-
# Arithmetic of the quadratic fields Q(sqrt(-p)) and Q(sqrt(p)) and of the
#+p-th cyclotomic field, as far as the Fleck quotient congruences need it:
#   - h(-p) by enumerating reduced positive definite forms,
#   - h(p) by counting cycles of reduced indefinite forms,
#   - the fundamental unit (v + u sqrt(p))/2 from the continued fraction of
#     (1 + sqrt(p))/2,
#   - ((p-1)/2)! mod p,
#   - regularity of p and h_p^- mod p from Bernoulli numbers.
# All of it is integer arithmetic (math.isqrt for square roots).

# ==== Importations
from __future__ import print_function
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import check_input
from .exactarith import is_prime, rational_mod_p
from .sequences import bernoulli_number

# ==== Data types
@dataclass(frozen=True)
class ImaginaryClassData(object):
    """h(-p) and the reduced forms (a, b, c) of discriminant -p"""
    p: int
    h_minus_p: int
    forms: tuple

@dataclass(frozen=True)
class RealClassData(object):
    """h(p) and the fundamental unit (v + u sqrt(p))/2 of Q(sqrt(p))"""
    p: int
    h_p: int
    u: int
    v: int

    @property
    def norm(self):
        """(v^2 - p u^2)/4, which is +1 or -1"""
        return (self.v**2 - self.p * self.u**2) // 4

@dataclass(frozen=True)
class RegularityReport(object):
    p: int
    is_regular: bool
    offending_indices: tuple = field(default_factory=tuple)
    h_minus_mod_p: int = 0

# ==== Imaginary quadratic field
def reduced_definite_forms(p):
    """Reduced forms (a, b, c) with b^2 - 4ac = -p, |b| <= a <= c and b >= 0
    whenever |b| = a or a = c. Sorted by (a, |b|, -b)."""
    forms = []
    a = 1
    while 3 * a * a <= p:
        for b in range(-a + 1, a + 1):
            if (b * b + p) % (4 * a) != 0:
                continue
            c = (b * b + p) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            forms.append((a, b, c))
        a += 1
    return tuple(sorted(forms, key=lambda f: (f[0], abs(f[1]), -f[1])))

def class_number_imaginary(p):
    """h(-p) for a prime p = 3 (mod 4), by reduced-form enumeration"""
    check_input(is_prime(p) and p % 4 == 3, p, "a prime = 3 (mod 4)", 'p')
    forms = reduced_definite_forms(p)
    return ImaginaryClassData(p, len(forms), forms)

# ==== Real quadratic field
def reduced_indefinite_forms(d):
    """Reduced forms (a, b, c) of the non-square discriminant d > 0:
    0 < b < sqrt(d) and sqrt(d) - b < 2|a| < sqrt(d) + b."""
    s = math.isqrt(d)
    forms = []
    for b in range(1, s + 1):
        if (b * b - d) % 4 != 0:
            continue
        ac = (b * b - d) // 4
        for a_abs in range(1, s + 1):
            if ac % a_abs != 0:
                continue
            if (2 * a_abs + b)**2 <= d:
                continue
            t = 2 * a_abs - b
            if t >= 0 and t * t >= d:
                continue
            for a in (a_abs, -a_abs):
                forms.append((a, b, ac // a))
    return forms

def rho(form, d):
    """One reduction step (a, b, c) -> (c, b', c') with b' = -b mod 2|c|
    and sqrt(d) - 2|c| < b' < sqrt(d)"""
    a, b, c = form
    s = math.isqrt(d)
    b2 = s - (s + b) % (2 * abs(c))
    return (c, b2, (b2 * b2 - d) // (4 * c))

def form_cycles(d):
    """Partition the reduced indefinite forms of discriminant d into rho-cycles"""
    remaining = set(reduced_indefinite_forms(d))
    cycles = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        cycle = [start]
        remaining.discard(start)
        f = rho(start, d)
        while f != start:
            cycle.append(f)
            remaining.discard(f)
            f = rho(f, d)
        cycles.append(cycle)
    return cycles

def fundamental_unit(p):
    """(u, v) with (v + u sqrt(p))/2 the fundamental unit of Q(sqrt(p)), p = 1 (mod 4).

    Walks the continued fraction of w = (1 + sqrt(p))/2, written as (P + sqrt(p))/Q,
    until a convergent h/k has norm h^2 - hk - k^2 (p-1)/4 = +-1."""
    s = math.isqrt(p)
    P, Q = 1, 2
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    q4 = (p - 1) // 4
    while True:
        if Q > 0:
            a = (P + s) // Q
        else:
            a = -((P + s) // (-Q)) - 1
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        if abs(h * h - h * k - k * k * q4) == 1:
            return k, 2 * h - k
        P = a * Q - P
        Q = (p - P * P) // Q

def real_class_and_unit(p):
    """h(p) and the fundamental unit of Q(sqrt(p)) for a prime p = 1 (mod 4)"""
    check_input(is_prime(p) and p % 4 == 1, p, "a prime = 1 (mod 4)", 'p')
    u, v = fundamental_unit(p)
    return RealClassData(p, len(form_cycles(p)), u, v)

# ==== Factorials and Bernoulli numerators
def half_factorial_mod_p(p):
    """((p-1)/2)! mod p"""
    check_input(p > 2 and is_prime(p), p, "an odd prime", 'p')
    acc = 1
    for k in range(2, (p - 1) // 2 + 1):
        acc = acc * k % p
    return acc % p

def regularity(p):
    """Regularity of p (no even n <= p-3 with p | numerator(B_n)) together with
    the product prod_{0<n<=(p-3)/2} (-B_{2n}/(4n)) mod p, which is h_p^- mod p."""
    check_input(p > 3 and is_prime(p), p, "a prime > 3", 'p')
    offending = tuple(n for n in range(2, p - 2, 2) if bernoulli_number(n).numerator % p == 0)
    prod = Fraction(1)
    for n in range(1, (p - 3) // 2 + 1):
        prod *= -bernoulli_number(2 * n) / (4 * n)
    return RegularityReport(p, len(offending) == 0, offending, rational_mod_p(prod, p))
