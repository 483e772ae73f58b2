#-*-coding:utf-8-*-
# Error types raised across pyFleckLab, and the input checker every public
#+function goes through before doing any arithmetic.

# ==== Importations
from __future__ import print_function
import sys

# ==== Exceptions
class FleckLabError(Exception):
    """Base class of every error raised by pyFleckLab"""

class PreconditionViolation(FleckLabError, ValueError):
    """A parameter is outside the domain of the requested operation"""

class NonUnit(FleckLabError, ArithmeticError):
    """The argument is divisible by the prime (e.g. a Fermat quotient of p*k)"""

class NonUnitDenominator(FleckLabError, ZeroDivisionError):
    """A rational cannot be reduced: its denominator is not a unit mod m"""

class IntegralityViolation(FleckLabError, ArithmeticError):
    """An exact division that should be exact did not come out exact"""

class ConsistencyViolation(FleckLabError, AssertionError):
    """Two evaluations of the same quantity disagree"""

class ResourceLimit(FleckLabError):
    """The computation exceeds a configured size bound"""

# ==== Helper functions
def check_input(expr, inp, chk, varname):
    """Raise a PreconditionViolation if the condition `expr` is False.

    Args:
    - expr (bool): the condition the input has to satisfy
    - inp: the offending value, echoed back in the message
    - chk (str): a human-readable description of the condition
    - varname (str): the name of the parameter"""
    if not expr:
        raise PreconditionViolation(
            "ERROR (Invalid setting): '{}'={}. '{}' must be {}".format(varname, inp, varname, chk))

def warn(msg):
    """Print a warning on the diagnostic stream"""
    print("WARNING: {}".format(msg), file=sys.stderr)
