"""Exact weighted Dedekind symbols, Hecke operators and eigenform coefficients.

All values cross the boundary exactly: rationals as fractions.Fraction,
integers as python ints.
"""

try:
    from dedsym._dedsym import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _dedsym import *  # noqa: F401,F403  (in-tree build directory)
