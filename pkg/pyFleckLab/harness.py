#-*-coding:utf-8-*-
# Congruence verification harness.
#
# Every check compares a left-hand side obtained by direct big-integer summation
#+with a right-hand side obtained from a closed formula or from class-field
#+data, and returns CongruenceReport records. Named suites group the checks and
#+fan them out with joblib; the scanner searches the prime-power period
#+conjecture for counterexamples.
#
# Inequalities are stored as congruences so that every report satisfies
#+    holds == ((lhs - rhs) % modulus == 0)
#+literally (see check_sharpness, check_floor_attained, check_regularity_criterion).

# ==== Importations
from __future__ import print_function
import datetime
import functools
import math
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from joblib import Parallel, delayed

from . import settings
from .classfield import (class_number_imaginary, half_factorial_mod_p, real_class_and_unit,
                         regularity)
from .closedforms import (expansion_depth, fleck_mod_p_by_digits, fleck_mod_p_by_series,
                          generalized_fleck_by_expansion, star)
from .errors import check_input, warn, IntegralityViolation
from .exactarith import PrimePower, is_prime, legendre, p_adic_order, rational_mod, sign
from .flecksums import generalized_fleck, generalized_fleck_row, recurrence_mod_p, weisman_floor
from .sequences import bernoulli_number, bernoulli_poly

# ==== Reports
@dataclass
class CongruenceReport(object):
    """One instance of a congruence lhs = rhs (mod modulus).

    Args:
    - check_id (str): name of the congruence family
    - params (dict): the witness parameters, name -> int
    - lhs, rhs (int): the two sides; a rational right side is stored as its
      least residue mod modulus and kept verbatim in exact_rhs
    - modulus (int): >= 1
    - holds (bool): modulus | lhs - rhs
    - elapsed (timedelta): time spent on the check"""
    check_id: str
    params: dict
    lhs: int
    rhs: int
    modulus: int
    holds: bool
    elapsed: datetime.timedelta = field(default_factory=datetime.timedelta, compare=False)
    exact_rhs: object = field(default=None, compare=False, repr=False)

    def to_record(self):
        """The serializable part: big integers as decimal strings"""
        return {'check_id': self.check_id,
                'params': dict(self.params),
                'lhs': str(self.lhs),
                'rhs': str(self.rhs),
                'modulus': str(self.modulus),
                'holds': self.holds}

def make_report(check_id, params, lhs, rhs, modulus, started=None):
    """Build a CongruenceReport, reducing a non-integral rhs modulo `modulus`"""
    check_input(modulus >= 1, modulus, "a positive integer", 'modulus')
    exact = rhs
    rhs = Fraction(rhs)
    rhs = rhs.numerator if rhs.denominator == 1 else rational_mod(rhs, modulus)
    holds = (lhs - rhs) % modulus == 0
    elapsed = datetime.timedelta(seconds=time.time() - started) if started else datetime.timedelta()
    return CongruenceReport(check_id, dict(params), lhs, rhs, modulus, holds, elapsed, exact)

def _power_or_one(p, e):
    return p**e if e > 0 else 1

# ==== Cached direct values
@functools.lru_cache(maxsize=4096)
def _direct_row(p, a, n):
    return tuple(v.value for v in generalized_fleck_row(PrimePower(p, a), n))

def direct_fleck(p, n, r, a=1):
    """F_{p^a}(n, r) by direct summation, memoized per row"""
    return _direct_row(p, a, n)[r % p**a]

def clear_cache():
    _direct_row.cache_clear()

# ==== Closed forms against direct values
def check_digit_form(p, n, r):
    t0 = time.time()
    res, tag = fleck_mod_p_by_digits(p, n, r)
    return make_report('digit-form', {'p': p, 'n': n, 'r': r, 'n0': tag.n0, 'n1': tag.n1},
                       direct_fleck(p, n, r) % p, res, p, t0)

def check_series_form(p, n, r, m):
    t0 = time.time()
    return make_report('series-form', {'p': p, 'n': n, 'r': r, 'm': m},
                       direct_fleck(p, n, r) % p, fleck_mod_p_by_series(p, n, r, m), p, t0)

def check_recurrence(p, n, r):
    t0 = time.time()
    lower = [direct_fleck(p, n - p + 1, s) % p for s in range(p)]
    return make_report('recurrence', {'p': p, 'n': n, 'r': r},
                       direct_fleck(p, n, r) % p, recurrence_mod_p(p, n, r, lower), p, t0)

# ==== Alternating sums over lifted indices
def lift_exponent(p, a, l, n):
    """a n + ceil((n - l*)/(p-1)) with l* = {-l}_{p-1}"""
    ls = star(p, l)
    return a * n - ((ls - n) // (p - 1))

def check_alternating_lift(p, a, l, n, r):
    """sum_{k=0}^n binom(n,k) (-1)^k F_p(k p^a (p-1) + l, r) = 0
    modulo p^(a n + ceil((n - l*)/(p-1))), the modulus being 1 when the exponent is <= 0"""
    t0 = time.time()
    step = p**a * (p - 1)
    lhs = sum(math.comb(n, k) * sign(k) * direct_fleck(p, k * step + l, r) for k in range(n + 1))
    return make_report('alternating-lift', {'p': p, 'a': a, 'l': l, 'n': n, 'r': r},
                       lhs, 0, _power_or_one(p, lift_exponent(p, a, l, n)), t0)

def check_kummer_family(p, a, l, r):
    """The three Kummer-type congruences, modulo p^a, p^(2a) and p^(3a)"""
    t0 = time.time()
    step = p**a * (p - 1)
    f0, f1, f2, f3 = [direct_fleck(p, k * step + l, r) for k in range(4)]
    params = {'p': p, 'a': a, 'l': l, 'r': r}
    return [make_report('kummer-1', params, f1, f0, p**a, t0),
            make_report('kummer-2', params, f2, 2 * f1 - f0, p**(2 * a), t0),
            make_report('kummer-3', params, f3, 3 * f2 - 3 * f1 + f0, p**(3 * a), t0)]

# ==== Binomial congruences
def _wolstenholme(p, n=None, r=None):
    t0 = time.time()
    return [make_report('wolstenholme', {'p': p}, math.comb(2 * p - 1, p - 1), 1, p**3, t0)]

def _glaisher(p, n=None, r=None):
    out = []
    for k in ([n] if n is not None else range(1, p + 1)):
        t0 = time.time()
        rhs = 1 - Fraction(k * (k - 1), 3) * p**3 * bernoulli_number(p - 3)
        out.append(make_report('glaisher', {'p': p, 'n': k}, math.comb(p * k - 1, p - 1), rhs, p**4, t0))
    return out

def _central(p, n=None, r=None):
    out = []
    for k in ([n] if n is not None else range(1, (p - 1) // 2)):
        check_input(k >= 1 and p > 2 * k + 1, k, "an integer >= 1 with p > 2n+1", 'n')
        t0 = time.time()
        lhs = math.comb(2 * p * k - 1, p * k - 1)
        rhs = sum(sign(k - 1 - j) * math.comb(2 * p * k, p * j) for j in range(k))
        out.append(make_report('central', {'p': p, 'n': k}, lhs, rhs, p**(2 * k + 1), t0))
    return out

def _bernoulli_tail(p, n=None, r=None):
    out = []
    for k in ([n] if n is not None else range(2, p + 1)):
        check_input(2 <= k <= p, k, "in [2, p]", 'n')
        t0 = time.time()
        lhs = sum(sign(p * j - 1) * math.comb(p * k - 1, p * j - 1) for j in range(1, k + 1))
        rhs = math.factorial(k - 1) * bernoulli_number(p - k) * p**k
        out.append(make_report('bernoulli-tail', {'p': p, 'n': k}, lhs, rhs, p**(k + 1), t0))
    return out

def _class_sum(p, n=None, r=None):
    t0 = time.time()
    half = (p - 1) // 2
    lhs = sum(sign(k - 1) * math.comb(p * half - 1, p * k - 1) for k in range(1, half + 1))
    if p % 4 == 3:
        h = class_number_imaginary(p).h_minus_p
        rhs = sign((h + 1) // 2) * h * p**half
    else:
        rhs = 0
    return [make_report('class-sum', {'p': p}, lhs, rhs, p**((p + 1) // 2), t0)]

def _near_central(p, n=None, r=None):
    out = []
    for s in ([r] if r is not None else range(p)):
        check_input(0 <= s < p, s, "in [0, p-1]", 'r')
        t0 = time.time()
        lhs = math.comb(2 * p - 1, p + s) + sign(p) * math.comb(2 * p - 1, s)
        rhs = sign(s) * p**2 * bernoulli_poly(p - 2)(-s)
        out.append(make_report('near-central', {'p': p, 'r': s}, lhs, rhs, p**3, t0))
    return out

def regularity_criterion_holds(p):
    """True if ord_p(sum_{k=1}^n (-1)^k binom(pn-1, pk-1)) = n for all odd 3 <= n <= p-2"""
    for n in range(3, p - 1, 2):
        s = sum(sign(k) * math.comb(p * n - 1, p * k - 1) for k in range(1, n + 1))
        if p_adic_order(s, p) != n:
            return False
    return True

def check_regularity_criterion(p):
    """The valuation criterion (lhs, 1 or 0) against the Bernoulli regularity test
    (rhs, 1 or 0), modulo 2"""
    t0 = time.time()
    rep = regularity(p)
    return make_report('regularity-criterion', {'p': p},
                       int(regularity_criterion_holds(p)), int(rep.is_regular), 2, t0)

def _regularity(p, n=None, r=None):
    return [check_regularity_criterion(p)]

# selector -> (family, smallest prime the family applies to)
REMARK_FAMILIES = {
    'wolstenholme': (_wolstenholme, 5),
    'glaisher': (_glaisher, 5),
    'central': (_central, 5),
    'bernoulli-tail': (_bernoulli_tail, 2),
    'class-sum': (_class_sum, 5),
    'near-central': (_near_central, 2),
    'regularity': (_regularity, 5),
}
REMARK_TAKES_N = ('glaisher', 'central', 'bernoulli-tail')
REMARK_TAKES_R = ('near-central',)

def check_remark_family(p, selector='all', n=None, r=None):
    """Binomial congruences modulo powers of p.

    Args:
    - p (int): a prime
    - selector (str): one of REMARK_FAMILIES or 'all'; 'all' skips the
      families that do not apply to p
    - n, r (int): restrict the sub-parameter of the families that have one

    Returns:
    - a list of CongruenceReport"""
    check_input(is_prime(p), p, "a prime", 'p')
    check_input(selector == 'all' or selector in REMARK_FAMILIES, selector,
                "'all' or one of {}".format(sorted(REMARK_FAMILIES)), 'selector')
    if selector != 'all':
        fam, pmin = REMARK_FAMILIES[selector]
        check_input(p >= pmin, p, "a prime >= {} for '{}'".format(pmin, selector), 'p')
        return fam(p, n, r)
    out = []
    for name in REMARK_FAMILIES:
        fam, pmin = REMARK_FAMILIES[name]
        if p >= pmin:
            out.extend(fam(p, n if name in REMARK_TAKES_N else None,
                           r if name in REMARK_TAKES_R else None))
    return out

# ==== Quadratic fields
def check_half_factorial(p):
    """((p-1)/2)! against (-1)^((h(-p)+1)/2) for p = 3 (mod 4), and against
    (-1)^((h(p)+1)/2) v/2 for p = 1 (mod 4)"""
    check_input(p > 3 and is_prime(p), p, "a prime > 3", 'p')
    t0 = time.time()
    lhs = half_factorial_mod_p(p)
    if p % 4 == 3:
        h = class_number_imaginary(p).h_minus_p
        return make_report('mordell', {'p': p, 'h': h}, lhs, sign((h + 1) // 2), p, t0)
    data = real_class_and_unit(p)
    rhs = sign((data.h_p + 1) // 2) * Fraction(data.v, 2)
    return make_report('chowla', {'p': p, 'h': data.h_p, 'u': data.u, 'v': data.v}, lhs, rhs, p, t0)

def check_quadratic_character(p, r):
    """F_p(p(p-1)/2, r) mod p against the class-number expression

        (-1)^((h(-p)+1)/2) (r/p)        if p = 3 (mod 4)
        (-1)^((h(p)-1)/2) (r/p) v/2     if p = 1 (mod 4)

    The value (-1)^((p+1)/2) (r/p) ((p-1)/2)! is computed too; params['sign_discrepancy']
    is 1 (and a warning is printed) when it does not match the expression."""
    check_input(p > 3 and is_prime(p), p, "a prime > 3", 'p')
    t0 = time.time()
    lhs = direct_fleck(p, p * (p - 1) // 2, r) % p
    chi = legendre(r, p)
    if p % 4 == 3:
        h = class_number_imaginary(p).h_minus_p
        rhs = Fraction(sign((h + 1) // 2) * chi)
    else:
        data = real_class_and_unit(p)
        h = data.h_p
        rhs = sign((h - 1) // 2) * chi * Fraction(data.v, 2)
    via_factorial = sign((p + 1) // 2) * chi * half_factorial_mod_p(p)
    discrepancy = int((rational_mod(rhs, p) - via_factorial) % p != 0)
    if discrepancy:
        warn("sign discrepancy in the class-number expression at p={}, r={}".format(p, r))
    return make_report('quadratic-character', {'p': p, 'r': r, 'h': h, 'sign_discrepancy': discrepancy},
                       lhs, rhs, p, t0)

# ==== Valuations
def check_sharpness(p, n):
    """The number of r in [0, p) with ord_p(C_p(n,r)) = floor((n-1)/(p-1)) is at
    least p - n*. Stored as lhs = max(0, bound - count), rhs = 0, modulus = p + 1."""
    check_input(n >= 1, n, "a positive integer", 'n')
    t0 = time.time()
    row = generalized_fleck_row(PrimePower(p, 1), n)
    count = sum(1 for v in row if p_adic_order(v.raw_sum, p) == v.floor_exponent)
    bound = p - star(p, n)
    return make_report('sharpness', {'p': p, 'n': n, 'count': count, 'bound': bound},
                       max(0, bound - count), 0, p + 1, t0)

def floor_attained(pp, n):
    """True if some r in [0, p^a) has ord_p(C_{p^a}(n,r)) equal to the Weisman floor"""
    return any(v % pp.p != 0 for v in _direct_row(pp.p, pp.a, n))

def check_floor_attained(pp, n):
    check_input(n >= pp.lower, n, "an integer >= p^(a-1)={}".format(pp.lower), 'n')
    t0 = time.time()
    return make_report('floor-attained', {'p': pp.p, 'a': pp.a, 'n': n},
                       1 - int(floor_attained(pp, n)), 0, 2, t0)

def check_weisman_bound(pp, n, r):
    """p^floor((n-p^(a-1))/phi(p^a)) divides C_{p^a}(n, r)"""
    check_input(n >= pp.lower, n, "an integer >= p^(a-1)={}".format(pp.lower), 'n')
    t0 = time.time()
    raw = generalized_fleck(pp, n, r).raw_sum
    return make_report('weisman-bound', {'p': pp.p, 'a': pp.a, 'n': n, 'r': r},
                       raw, 0, _power_or_one(pp.p, weisman_floor(pp, n)), t0)

def check_generalized_period(pp, n, r):
    """F_{p^a}(n + p^a(p-1), r) = F_{p^a}(n, r) (mod p) for a >= 2, n >= 2 p^(a-1).
    params['floor_attained'] records whether the Weisman floor is reached at n."""
    check_input(pp.a >= 2, pp.a, "an integer >= 2", 'a')
    check_input(n >= 2 * pp.lower, n, "an integer >= 2p^(a-1)={}".format(2 * pp.lower), 'n')
    t0 = time.time()
    lhs = direct_fleck(pp.p, n + pp.modulus * (pp.p - 1), r, pp.a)
    rhs = direct_fleck(pp.p, n, r, pp.a)
    return make_report('period', {'p': pp.p, 'a': pp.a, 'n': n, 'r': r,
                                  'floor_attained': int(floor_attained(pp, n))},
                       lhs, rhs, pp.p, t0)

def check_expansion(pp, n, r):
    """F_{p^a}(n, r) against its expansion over the column F_{p^a}(n+k, 0), mod p"""
    t0 = time.time()
    column = [direct_fleck(pp.p, n + k, 0, pp.a) for k in range(expansion_depth(pp, n) + 1)]
    return make_report('expansion', {'p': pp.p, 'a': pp.a, 'n': n, 'r': r},
                       direct_fleck(pp.p, n, r, pp.a) % pp.p,
                       generalized_fleck_by_expansion(pp, n, r, column), pp.p, t0)

def check_class_number_suite(p, r_values=None):
    out = [check_half_factorial(p)]
    for r in (range(p) if r_values is None else r_values):
        out.append(check_quadratic_character(p, r))
    return out

# ==== Suites
SUITES = ('digits', 'series', 'recurrence', 'lift', 'kummer', 'remark', 'classnum',
          'sharpness', 'period', 'weisman', 'expansion')
# Numbered names the suites are also known by
SUITE_ALIASES = {'thm11': 'digits', 'thm12': 'series', 'thm13': 'lift'}

def _or(values, default):
    return list(default) if values is None else list(values)

def suite_tasks(name, p, n=None, r=None, a=None, l=None, select='all'):
    """The deterministic list of (function, args) a suite runs for one prime p.
    Each function returns a report or a list of reports."""
    name = SUITE_ALIASES.get(name, name)
    check_input(name in SUITES, name, "one of {}".format(', '.join(SUITES)), 'suite')
    check_input(is_prime(p), p, "a prime", 'p')
    rs = _or(r, range(p))
    tasks = []
    if name in ('digits', 'series', 'recurrence'):
        lo = p if name == 'recurrence' else 0
        for nn in _or(n, range(lo, 2 * p * (p - 1) + p + 1)):
            for rr in rs:
                if name == 'digits':
                    tasks.append((check_digit_form, (p, nn, rr)))
                elif name == 'recurrence':
                    tasks.append((check_recurrence, (p, nn, rr)))
                else:
                    tasks.append((check_series_form, (p, nn, rr, nn % p)))
                    tasks.append((check_series_form, (p, nn, rr, nn % p - p)))
    elif name == 'lift':
        for aa in _or(a, [1]):
            for ll in _or(l, range(p)):
                for nn in _or(n, range(4)):
                    for rr in rs:
                        tasks.append((check_alternating_lift, (p, aa, ll, nn, rr)))
    elif name == 'kummer':
        for aa in _or(a, [1]):
            for ll in _or(l, range(p)):
                for rr in rs:
                    tasks.append((check_kummer_family, (p, aa, ll, rr)))
    elif name == 'remark':
        families = [select] if select != 'all' else [
            fam for (fam, (_, pmin)) in REMARK_FAMILIES.items() if p >= pmin]
        for fam in families:
            for nn in (_or(n, [None]) if fam in REMARK_TAKES_N else [None]):
                for rr in (_or(r, [None]) if fam in REMARK_TAKES_R else [None]):
                    tasks.append((check_remark_family, (p, fam, nn, rr)))
    elif name == 'classnum':
        tasks.append((check_class_number_suite, (p, rs)))
    elif name == 'sharpness':
        for nn in _or(n, range(1, 2 * p * (p - 1) + 1)):
            tasks.append((check_sharpness, (p, nn)))
    else:
        for aa in _or(a, [2]):
            pp = PrimePower(p, aa)
            lo = 2 * pp.lower if name == 'period' else pp.lower
            ns = _or(n, range(lo, lo + 2 * pp.modulus * (p - 1) + 1))
            rrs = _or(r, range(pp.modulus))
            for nn in ns:
                if name == 'period':
                    tasks.append((check_floor_attained, (pp, nn)))
                for rr in rrs:
                    if name == 'period':
                        tasks.append((check_generalized_period, (pp, nn, rr)))
                    elif name == 'weisman':
                        tasks.append((check_weisman_bound, (pp, nn, rr)))
                    else:
                        tasks.append((check_expansion, (pp, nn, rr)))
    return tasks

def _run_task(func, args, strict):
    try:
        out = func(*args)
    except IntegralityViolation as e:
        if strict:
            raise
        warn(str(e))
        out = make_report('integrality', {'arg{}'.format(i): v for (i, v) in enumerate(args)
                                          if isinstance(v, int)}, 1, 0, 2)
    return out if isinstance(out, list) else [out]

def run_suite(name, primes, n=None, r=None, a=None, l=None, select='all',
              jobs=settings.DEFAULT_JOBS, strict=True, verbose=0):
    """Run a named suite over a list of primes.

    Args:
    - name (str): one of SUITES
    - primes (list of int): the primes to run on
    - n, r, a, l (list of int): parameter ranges, suite defaults when None
    - select (str): the remark selector
    - jobs (int): joblib workers; reports come back in task order
    - strict (bool): if False an IntegralityViolation becomes a failing report
    - verbose (int): 0 is silent, k > 0 prints progress every k tasks on stderr

    Returns:
    - the list of CongruenceReport"""
    check_input(isinstance(jobs, int) and (jobs >= 1 or jobs == -1), jobs, "a positive integer or -1", 'jobs')
    check_input(isinstance(verbose, int) and verbose >= 0, verbose, "a nonnegative integer", 'verbose')
    tasks = []
    for p in primes:
        tasks.extend(suite_tasks(name, p, n, r, a, l, select))

    tic = time.time()
    if verbose > 0:
        _banner("Starting suite '{}' ({} tasks, {} jobs)".format(name, len(tasks), jobs))
    if jobs == 1:
        results = []
        for (i, (func, args)) in enumerate(tasks):
            results.append(_run_task(func, args, strict))
            if verbose > 0 and (i + 1) % verbose == 0:
                print("{:>8d}/{} tasks  {:>8.2f}s".format(i + 1, len(tasks), time.time() - tic),
                      file=sys.stderr)
    else:
        results = Parallel(n_jobs=jobs)(delayed(_run_task)(func, args, strict) for (func, args) in tasks)
    reports = [rep for chunk in results for rep in chunk]
    if verbose > 0:
        failed = sum(1 for rep in reports if not rep.holds)
        _banner("Suite '{}' done: {} reports, {} violated, {:.2f}s".format(
            name, len(reports), failed, time.time() - tic))
    return reports

def _banner(msg):
    txt = """
===================================================================
{}
{}
==================================================================="""
    print(txt.format(datetime.datetime.now(), msg), file=sys.stderr)

# ==== Conjecture scan
@dataclass
class ScanResult(object):
    """Outcome of a counterexample search. An empty counterexample list means no
    violation was found in the range, nothing more."""
    conjecture_id: str
    range: dict
    instances_checked: int = 0
    counterexamples: list = field(default_factory=list)
    cursor: tuple = None

    def to_record(self):
        return {'conjecture_id': self.conjecture_id,
                'range': dict(self.range),
                'instances_checked': self.instances_checked,
                'counterexamples': [dict(c) for c in self.counterexamples],
                'cursor': list(self.cursor) if self.cursor is not None else None}

    @classmethod
    def from_record(cls, rec):
        cursor = rec.get('cursor')
        return cls(rec['conjecture_id'], dict(rec['range']), rec['instances_checked'],
                   [dict(c) for c in rec['counterexamples']],
                   tuple(cursor) if cursor is not None else None)

def scan_instances(primes, a_values, b_values, n_max, r_values=None):
    """Lexicographic iterator over the tuples (p, a, b, n, r) of the scan"""
    for p in sorted(primes):
        for a in sorted(a_values):
            for b in sorted(b_values):
                n_lo = 2 * p**(a + b - 2)
                rs = sorted(r for r in (range(p**a) if r_values is None else r_values) if 0 <= r < p**a)
                for n in range(n_lo, n_max + 1):
                    for r in rs:
                        yield (p, a, b, n, r)

def _period_holds(p, a, b, n, r, cached=True):
    shift = p**(a + b - 1) * (p - 1)
    if cached:
        lhs, rhs = direct_fleck(p, n + shift, r, a), direct_fleck(p, n, r, a)
    else:
        pp = PrimePower(p, a)
        lhs, rhs = generalized_fleck(pp, n + shift, r).value, generalized_fleck(pp, n, r).value
    return (lhs - rhs) % p**b == 0

def scan_quotient_period(primes, a_values, b_values, n_max, r_values=None, start_after=None,
                         resume=None, checkpoint=None, checkpoint_every=1000, verbose=0):
    """Search F_{p^a}(n + phi(p^(a+b)), r) = F_{p^a}(n, r) (mod p^b), n >= 2p^(a+b-2),
    for counterexamples.

    Args:
    - primes, a_values, b_values (lists of int): the parameter ranges
    - n_max (int): largest n tested
    - r_values (list of int): defaults to range(p^a); values outside [0, p^a) are dropped
    - start_after (tuple): resume after this (p, a, b, n, r) cursor
    - resume (ScanResult): an earlier partial result over the same range; its
      counts and counterexamples are carried over and its cursor is the
      default start_after
    - checkpoint (callable): called as checkpoint(result) with the running
      ScanResult every checkpoint_every instances and at the end
    - verbose (int): progress every `verbose` instances on stderr

    Returns:
    - a ScanResult. Candidates are recomputed without the row cache before
      being recorded as counterexamples."""
    for p in primes:
        check_input(is_prime(p), p, "a prime", 'p')
    for v in list(a_values) + list(b_values):
        check_input(isinstance(v, int) and v >= 1, v, "a positive integer", 'a/b')
    rng = {'p': sorted(primes), 'a': sorted(a_values), 'b': sorted(b_values), 'n_max': n_max}
    if r_values is not None:
        rng['r'] = sorted(r_values)
    result = ScanResult('quotient-period', rng)
    if resume is not None:
        check_input(resume.range == rng, resume.range, "the range {}".format(rng), 'resume.range')
        result.instances_checked = resume.instances_checked
        result.counterexamples = [dict(c) for c in resume.counterexamples]
        result.cursor = resume.cursor
        if start_after is None:
            start_after = resume.cursor
    start = tuple(start_after) if start_after is not None else None
    tic = time.time()
    if verbose > 0:
        _banner("Starting scan over {}".format(rng))

    for inst in scan_instances(primes, a_values, b_values, n_max, r_values):
        if start is not None and inst <= start:
            continue
        result.instances_checked += 1
        if not _period_holds(*inst):
            if _period_holds(*inst, cached=False):
                warn("candidate {} vanished on recomputation".format(inst))
            else:
                result.counterexamples.append(dict(zip('pabnr', inst)))
        result.cursor = inst
        if checkpoint is not None and result.instances_checked % checkpoint_every == 0:
            checkpoint(result)
        if verbose > 0 and result.instances_checked % verbose == 0:
            print("{:>10d} instances  cursor={}  {:>8.2f}s".format(
                result.instances_checked, inst, time.time() - tic), file=sys.stderr)

    if checkpoint is not None and result.cursor is not None:
        checkpoint(result)
    if verbose > 0:
        _banner("Scan done: {} instances, {} counterexamples, {:.2f}s".format(
            result.instances_checked, len(result.counterexamples), time.time() - tic))
    return result
