"""Exact rational scalars.

All arithmetic in this package is exact; gmpy2.mpq is the working rational
type (much faster than fractions.Fraction, identical semantics).
"""

from fractions import Fraction

from gmpy2 import mpq, mpz

RAT_TYPES = (int, type(mpq()), Fraction, type(mpz()))

ZERO = mpq(0)
ONE = mpq(1)


def rat(value, den=None):
    """Coerce ints, Fractions, mpq, or 'p/q' strings to mpq."""
    if den is not None:
        return mpq(value, den)
    if isinstance(value, str):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def rat_str(q):
    """Serialize as an explicit 'p/q' string."""
    q = mpq(q)
    return "%s/%s" % (q.numerator, q.denominator)


def is_rat(value):
    return isinstance(value, RAT_TYPES)
