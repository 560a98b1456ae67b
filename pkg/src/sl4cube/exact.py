"""Exact scalar arithmetic: rationals and the combinatorial functions used everywhere.

All scalars in this package are Python ints or ``fractions.Fraction``; there is
no floating point anywhere.  ``Fraction`` is arbitrary precision and always
reduced with positive denominator, which is exactly the Rational contract the
rest of the package relies on.
"""

from fractions import Fraction
from math import comb, factorial as _factorial

Rational = Fraction


def factorial(n):
    """n! as an exact integer.  Requires n >= 0."""
    if n < 0:
        raise ValueError("factorial of negative argument")
    return _factorial(n)


def binomial(n, k):
    """C(n, k) for 0 <= k <= n, and 0 outside that range."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def pochhammer(a, n):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.

    Works for int and Fraction arguments alike; the result is exact.
    """
    if n < 0:
        raise ValueError("pochhammer length must be >= 0")
    out = 1
    for i in range(n):
        out *= a + i
    return out
