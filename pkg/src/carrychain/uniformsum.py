"""Sums of i.i.d. uniform [0,1] variables, exactly.

The cumulative distribution of such a sum is piecewise polynomial with
rational coefficients, so for rational arguments everything is exact. The
probability that the sum lands in the unit interval 1/p + [k-1, k]
reproduces the generalized Eulerian numbers divided by p^n n!, which gives
an analytic cross-check of the triangle completely independent of the
combinatorial recurrence.
"""

from __future__ import annotations

import math
from fractions import Fraction


def irwin_hall_cdf(n: int, x) -> Fraction:
    """Pr(sum of n i.i.d. uniform [0,1] variables <= x), exact for rational x."""
    if n < 1:
        raise ValueError(f"need at least one summand, got n={n}")
    x = Fraction(x)
    if x <= 0:
        return Fraction(0)
    if x >= n:
        return Fraction(1)
    total = sum(((-1) ** k * math.comb(n, k) * (x - k) ** n
                 for k in range(math.floor(x) + 1)),
                Fraction(0))
    return total / math.factorial(n)


def interval_prob(n: int, p, k: int) -> Fraction:
    """Pr(sum of n uniforms lands in 1/p + [k-1, k]), exact for rational p."""
    p = Fraction(p)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return irwin_hall_cdf(n, 1 / p + k) - irwin_hall_cdf(n, 1 / p + k - 1)


def interval_prob_float(n: int, p: float, k: int) -> float:
    """Floating-point interval probability for exploratory irrational p.

    NOT exact: this is an ordinary double-precision evaluation for
    parameters outside the rational theory. Use interval_prob for anything
    that feeds a test or a verification.
    """
    def cdf(x: float) -> float:
        if x <= 0:
            return 0.0
        if x >= n:
            return 1.0
        return sum((-1) ** k_ * math.comb(n, k_) * (x - k_) ** n
                   for k_ in range(math.floor(x) + 1)) / math.factorial(n)

    return cdf(1 / p + k) - cdf(1 / p + k - 1)
