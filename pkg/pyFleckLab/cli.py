#-*-coding:utf-8-*-
# Command-line interface of pyFleckLab (console script `flecklab`).
#
#   flecklab eval   --p 3 --n 4 --r 0
#   flecklab verify --suite remark --p 5 [--select wolstenholme]
#   flecklab scan   [--conjecture 1.1] --p 2..3 --a 1..2 --b 1..2 --n-max 200 [--cursor scan.json]
#   flecklab class  --p 7
#   flecklab table  --p 5 --n-max 40
#
# Records go to stdout, diagnostics to stderr. Exit codes: 0 everything holds,
#+1 a congruence is violated, 2 usage or parameter error, 3 ResourceLimit.
# Integer ranges are written lo..hi (inclusive) or a,b,c; a range starting with
#+a minus sign must be attached to its flag (--r=-3..3).

# ==== Importations
from __future__ import print_function
import argparse
import csv
import json
import os
import sys

from . import __version__, settings
from .classfield import class_number_imaginary, half_factorial_mod_p, real_class_and_unit, regularity
from .closedforms import fleck_mod_p_by_digits, fleck_mod_p_by_series
from .errors import (FleckLabError, ConsistencyViolation, IntegralityViolation,
                     PreconditionViolation, ResourceLimit)
from .exactarith import PrimePower, primes_between
from .flecksums import generalized_fleck, recurrence_mod_p, recurrence_table, residue_table
from .harness import (SUITES, SUITE_ALIASES, REMARK_FAMILIES, ScanResult, run_suite,
                      scan_quotient_period)
from .sequences import (bernoulli_number, higher_bernoulli_mod_p, higher_bernoulli_number,
                        higher_bernoulli_poly_eval, stirling1_unsigned, stirling2)

FORMATS = ('json-lines', 'csv', 'human')
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# conjecture number -> scanner
SCAN_FAMILIES = {'1.1': scan_quotient_period}

# ==== Parsing
class _UsageError(Exception):
    pass

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError("{}: error: {}".format(self.prog, message))

def int_range(text):
    """Parse 'lo..hi' (inclusive), 'a,b,c' or a single integer into a list"""
    try:
        if '..' in text:
            lo, hi = text.split('..', 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError("invalid integer range '{}'".format(text))

def _build_parser():
    parser = _Parser(prog='flecklab', description="Fleck quotients and their congruences")
    parser.add_argument('--version', action='version', version=__version__)
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    def formats(p):
        p.add_argument('--format', choices=FORMATS, default='json-lines')

    ev = sub.add_parser('eval', help="evaluate one quantity")
    ev.add_argument('--what', default='fleck',
                    choices=['fleck', 'closed', 'bernoulli', 'stirling1', 'stirling2', 'higher-bernoulli'])
    ev.add_argument('--p', type=int)
    ev.add_argument('--a', type=int, default=1)
    ev.add_argument('--n', type=int, default=0)
    ev.add_argument('--r', type=int, default=0)
    ev.add_argument('--k', type=int, default=0)
    ev.add_argument('--m', type=int, default=1)
    ev.add_argument('--t', type=int, default=0)
    formats(ev)

    ve = sub.add_parser('verify', help="run a named congruence suite")
    ve.add_argument('--suite', choices=list(SUITES) + sorted(SUITE_ALIASES), required=True)
    ve.add_argument('--p', type=int_range, required=True)
    for flag in ('--n', '--r', '--a', '--l'):
        ve.add_argument(flag, type=int_range)
    ve.add_argument('--select', default='all', choices=['all'] + sorted(REMARK_FAMILIES))
    ve.add_argument('--jobs', type=int, default=settings.DEFAULT_JOBS)
    ve.add_argument('--lenient', action='store_true',
                    help="report integrality failures instead of aborting")
    ve.add_argument('--verbose', type=int, default=0)
    formats(ve)

    sc = sub.add_parser('scan', help="search the prime-power period conjecture")
    sc.add_argument('--conjecture', choices=sorted(SCAN_FAMILIES), default='1.1')
    sc.add_argument('--p', type=int_range, required=True)
    sc.add_argument('--a', type=int_range, default=[1])
    sc.add_argument('--b', type=int_range, default=[1])
    sc.add_argument('--r', type=int_range)
    sc.add_argument('--n-max', type=int, required=True)
    sc.add_argument('--cursor', help="JSON file to resume from and checkpoint to")
    sc.add_argument('--checkpoint-every', type=int, default=1000)
    sc.add_argument('--verbose', type=int, default=0)
    formats(sc)

    cl = sub.add_parser('class', help="class-field data of p")
    cl.add_argument('--p', type=int_range,
                    help="primes to describe (default: every odd prime up to {})".format(
                        settings.CLASS_PRIME_CEILING))
    formats(cl)

    ta = sub.add_parser('table', help="table of F mod p")
    ta.add_argument('--p', type=int, required=True)
    ta.add_argument('--a', type=int, default=1)
    ta.add_argument('--n-max', type=int, required=True)
    ta.add_argument('--method', choices=['direct', 'recurrence'], default='direct')
    formats(ta)
    return parser

# ==== Output
def _cell(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(',', ':'))
    if isinstance(v, bool):
        return 'true' if v else 'false'
    if v is None:
        return ''
    return str(v)

def emit(records, fmt='json-lines', stream=None):
    """Write records (dicts) to stream in one of FORMATS"""
    stream = sys.stdout if stream is None else stream
    records = list(records)
    if fmt == 'json-lines':
        for rec in records:
            stream.write(json.dumps(rec, separators=(',', ':')) + '\n')
        return
    if not records:
        return
    keys = list(records[0].keys())
    if fmt == 'csv':
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(keys)
        for rec in records:
            writer.writerow([_cell(rec.get(k)) for k in keys])
        return
    rows = [[_cell(rec.get(k)) for k in keys] for rec in records]
    widths = [max(len(k), *(len(row[i]) for row in rows)) for (i, k) in enumerate(keys)]
    stream.write('  '.join(k.ljust(w) for (k, w) in zip(keys, widths)).rstrip() + '\n')
    for row in rows:
        stream.write('  '.join(c.ljust(w) for (c, w) in zip(row, widths)).rstrip() + '\n')

# ==== Subcommands
def _require_p(args):
    if args.p is None:
        raise PreconditionViolation("ERROR (Invalid setting): '--p' is required for --what {}".format(args.what))

def _cmd_eval(args, out):
    if args.what == 'fleck':
        _require_p(args)
        fv = generalized_fleck(PrimePower(args.p, args.a), args.n, args.r)
        rec = {'p': args.p, 'a': args.a, 'n': args.n, 'r': args.r,
               'value': str(fv.value), 'raw_sum': str(fv.raw_sum),
               'floor_exponent': fv.floor_exponent, 'bracket_correction': fv.bracket_correction,
               'residue_mod_p': fv.residue()}
    elif args.what == 'closed':
        _require_p(args)
        direct = generalized_fleck(PrimePower(args.p, 1), args.n, args.r).residue()
        digits, tag = fleck_mod_p_by_digits(args.p, args.n, args.r)
        rec = {'p': args.p, 'n': args.n, 'r': args.r, 'direct': direct,
               'digits': digits, 'branch': tag.which.value, 'n0': tag.n0, 'n1': tag.n1,
               'series': fleck_mod_p_by_series(args.p, args.n, args.r)}
        if args.n >= args.p:
            lower = [generalized_fleck(PrimePower(args.p, 1), args.n - args.p + 1, s).residue()
                     for s in range(args.p)]
            rec['recurrence'] = recurrence_mod_p(args.p, args.n, args.r, lower)
        if any(rec[k] != direct for k in ('digits', 'series', 'recurrence') if k in rec):
            raise ConsistencyViolation("closed forms disagree: {}".format(rec))
    elif args.what == 'bernoulli':
        rec = {'n': args.n, 'value': str(bernoulli_number(args.n))}
    elif args.what == 'stirling1':
        rec = {'n': args.n, 'k': args.k, 'value': str(stirling1_unsigned(args.n, args.k))}
    elif args.what == 'stirling2':
        rec = {'n': args.n, 'k': args.k, 'value': str(stirling2(args.n, args.k))}
    else:
        if args.t == 0:
            value = higher_bernoulli_number(args.n, args.m)
        else:
            value = higher_bernoulli_poly_eval(args.n, args.m, args.t)
        rec = {'n': args.n, 'm': args.m, 't': args.t, 'value': str(value)}
        if args.p is not None:
            rec['p'] = args.p
            rec['residue_mod_p'] = higher_bernoulli_mod_p(args.n, args.m, args.t, args.p)
    emit([rec], args.format, out)
    return EXIT_OK

def _cmd_verify(args, out):
    reports = run_suite(args.suite, args.p, n=args.n, r=args.r, a=args.a, l=args.l,
                        select=args.select, jobs=args.jobs, strict=not args.lenient,
                        verbose=args.verbose)
    emit([rep.to_record() for rep in reports], args.format, out)
    return EXIT_OK if all(rep.holds for rep in reports) else EXIT_VIOLATION

def _cmd_scan(args, out):
    scan = SCAN_FAMILIES[args.conjecture]
    resume = None
    if args.cursor and os.path.exists(args.cursor):
        with open(args.cursor) as f:
            resume = ScanResult.from_record(json.load(f))

    def save(result):
        with open(args.cursor, 'w') as f:
            json.dump(result.to_record(), f)

    result = scan(args.p, args.a, args.b, args.n_max, r_values=args.r, resume=resume,
                  checkpoint=save if args.cursor else None,
                  checkpoint_every=args.checkpoint_every, verbose=args.verbose)
    emit([result.to_record()], args.format, out)
    return EXIT_OK if not result.counterexamples else EXIT_VIOLATION

def _class_record(p):
    if p % 4 == 3:
        data = class_number_imaginary(p)
        rec = {'p': p, 'kind': 'imaginary', 'class_number': data.h_minus_p,
               'forms': [list(f) for f in data.forms]}
    elif p % 4 == 1:
        data = real_class_and_unit(p)
        rec = {'p': p, 'kind': 'real', 'class_number': data.h_p, 'u': str(data.u), 'v': str(data.v)}
    else:
        raise PreconditionViolation("ERROR (Invalid setting): 'p'={}. 'p' must be an odd prime".format(p))
    rec['half_factorial'] = half_factorial_mod_p(p)
    if p > 3:
        rep = regularity(p)
        rec.update({'regular': rep.is_regular, 'irregular_indices': list(rep.offending_indices),
                    'h_minus_mod_p': rep.h_minus_mod_p})
    else:
        rec.update({'regular': None, 'irregular_indices': None, 'h_minus_mod_p': None})
    return rec

def _cmd_class(args, out):
    primes = primes_between(3, settings.CLASS_PRIME_CEILING) if args.p is None else args.p
    emit([_class_record(p) for p in primes], args.format, out)
    return EXIT_OK

def _cmd_table(args, out):
    if args.method == 'recurrence':
        if args.a != 1:
            raise PreconditionViolation("ERROR (Invalid setting): 'a'={}. the recurrence needs a=1".format(args.a))
        table = recurrence_table(args.p, args.n_max)
    else:
        table = residue_table(args.p, args.n_max, a=args.a)
    recs = []
    for (n, row) in enumerate(table):
        rec = {'n': n}
        rec.update(('r{}'.format(r), int(v)) for (r, v) in enumerate(row))
        recs.append(rec)
    emit(recs, args.format, out)
    return EXIT_OK

COMMANDS = {'eval': _cmd_eval, 'verify': _cmd_verify, 'scan': _cmd_scan,
            'class': _cmd_class, 'table': _cmd_table}

# ==== Entry points
def dispatch(argv, stdout=None, stderr=None):
    """Run one invocation and return its exit code"""
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(parser.format_usage().rstrip(), file=err)
        print(str(e), file=err)
        return EXIT_USAGE
    except SystemExit as e:  # --help / --version
        return e.code if isinstance(e.code, int) else EXIT_OK

    try:
        return COMMANDS[args.command](args, out)
    except ResourceLimit as e:
        print("ERROR (Resource limit): {}".format(e), file=err)
        return EXIT_RESOURCE
    except (ConsistencyViolation, IntegralityViolation) as e:
        print("ERROR (Violation): {}".format(e), file=err)
        return EXIT_VIOLATION
    except FleckLabError as e:
        print(str(e), file=err)
        return EXIT_USAGE

def main():
    sys.exit(dispatch(sys.argv[1:]))

if __name__ == '__main__':
    main()
