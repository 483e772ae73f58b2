#-*-coding:utf-8-*-
# Run-time configuration of pyFleckLab.
# Values are read from the environment each time they are asked for, so that a
#+test (or a worker) can change them without reloading the package.

# ==== Importations
import os

from .errors import check_input

# ==== Defaults
DEFAULT_MAX_N = 10**6           # largest n for a direct alternating sum
DEFAULT_BERNOULLI_MAX = 512     # memo ceiling of the Bernoulli cache
CLASS_PRIME_CEILING = 257       # top prime of the class-field suites
DEFAULT_JOBS = 1                # joblib workers

ENV_MAX_N = 'FLECKLAB_MAX_N'
ENV_BERNOULLI_MAX = 'FLECKLAB_BERNOULLI_MAX'

## ==== Accessors
def _from_env(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        val = int(raw)
    except ValueError:
        val = None
    check_input(val is not None and val > 0, raw, "a positive integer", name)
    return val

def max_n():
    """Bound on n above which direct summation raises ResourceLimit"""
    return _from_env(ENV_MAX_N, DEFAULT_MAX_N)

def bernoulli_ceiling():
    """Largest index the Bernoulli cache agrees to compute"""
    return _from_env(ENV_BERNOULLI_MAX, DEFAULT_BERNOULLI_MAX)
