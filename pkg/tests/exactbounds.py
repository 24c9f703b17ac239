"""Exact rational checks of logarithmic approximation bounds.

`alg <= opt * (ln(arg) + 1 + additive)` cannot be tested with floats
without inviting flaky boundary failures, so it is rearranged to
`e^(alg - opt*(1 + additive)) <= arg^opt` and decided with integer
arithmetic against a rational upper bound on e (Taylor remainder
bounded by 2/(N+1)!). All exponents here are integers by construction:
weights are integers and every additive term used in this package is an
integer.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

_N = 30
E_LOWER = sum(Fraction(1, factorial(i)) for i in range(_N + 1))
E_UPPER = E_LOWER + Fraction(2, factorial(_N + 1))


def within_ln_plus_one(alg: int, opt: int, arg: int, additive: int = 0) -> bool:
    """Certified check of alg <= opt * (ln(arg) + 1 + additive).

    ``arg`` is the logarithm argument (at least 1). Returns False for
    borderline cases the rational bracketing cannot certify, which is
    the safe direction for an acceptance test.
    """
    if alg < 0 or opt < 0 or arg < 1:
        raise ValueError("alg, opt nonnegative and arg >= 1 required")
    if opt == 0:
        return alg == 0
    excess = alg - opt * (1 + additive)
    if excess <= 0:
        return True
    # alg <= opt*(1+a) + opt*ln(arg)  <=>  e^excess <= arg^opt
    return E_UPPER.numerator**excess <= arg**opt * E_UPPER.denominator**excess
