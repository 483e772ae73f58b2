#-*-coding:utf-8-*-
# pyFleckLab: exact Fleck quotients, their closed forms modulo p, and a
#+harness that checks the congruences they satisfy.

__version__ = '0.1.0'

from .errors import (FleckLabError, PreconditionViolation, NonUnit, NonUnitDenominator,
                     IntegralityViolation, ConsistencyViolation, ResourceLimit)
from .exactarith import (INFINITE, PrimePower, binomial, least_residue, p_adic_order, legendre,
                         fermat_quotient, rational_mod_p)
from .flecksums import (FleckValue, alternating_sum, fleck_floor, fleck_quotient, weisman_floor,
                        generalized_fleck, recurrence_mod_p)
from .harness import CongruenceReport, ScanResult, run_suite, scan_quotient_period
