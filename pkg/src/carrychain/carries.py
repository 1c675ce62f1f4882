"""Carry chains: state spaces, the triangle parameter p, and exact transition matrices.

The chain tracks the carry produced while adding n numbers column by column.
From carry c, with column digits x_1..x_n drawn uniformly from the digit set,
the output digit a is the forced residue representative of c + sum(x) and the
next carry is (c + sum(x) - a) / base.

Two independent routes to the transition matrix are provided: the
alternating-binomial closed form (consecutive digit sets only) and a
definition-level brute-force count that also accepts arbitrary digit sets.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import ExactMatrix
from .numeration import NumerationSystem


@dataclass(frozen=True)
class StateSpace:
    s: int
    t: int

    @property
    def size(self) -> int:
        return self.t - self.s + 1

    @property
    def states(self) -> list[int]:
        return list(range(self.s, self.t + 1))


@dataclass(frozen=True)
class ChainSpec:
    system: NumerationSystem
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one summand, got n={self.n}")


def state_space(spec: ChainSpec) -> StateSpace:
    """Carry range {s, ..., t} of the n-summand chain."""
    l = spec.system.centroid_offset
    n = spec.n
    return StateSpace(s=math.floor((n - 1) * l),
                      t=math.ceil((n - 1) * (l + 1)))


def p_param(spec: ChainSpec) -> Fraction:
    """The rational p >= 1 selecting which generalized Eulerian triangle applies.

    Reciprocal of the fractional part of (n-1)(-l) for positive base and of
    (n-1)l for negative base; 1 when that quantity is an integer.
    """
    l = spec.system.centroid_offset
    x = (spec.n - 1) * (l if spec.system.negative else -l)
    if x.denominator == 1:
        return Fraction(1)
    return 1 / (x - math.floor(x))


def _count_binom(m: int, k: int) -> int:
    # Counting binomial: zero below the diagonal and for negative tops.
    return math.comb(m, k) if m >= 0 else 0


def transition_matrix(spec: ChainSpec) -> ExactMatrix:
    """m x m transition matrix by closed formula, states ascending s..t.

    Entry (i, j) is the probability of moving from carry s+i to carry s+j;
    every denominator divides b**n and rows sum to exactly 1.
    """
    sys_, n = spec.system, spec.n
    b, d = sys_.base_magnitude, sys_.d
    m = state_space(spec).size
    bn = b ** n
    if sys_.negative:
        # Offset from the floor of (n-1)l cleared against the modulus b+1.
        rho = ((n - 1) * (-d - b)) % (b + 1)

        def entry(i: int, j: int) -> Fraction:
            total = sum(
                (-1) ** r * math.comb(n + 1, r)
                * _count_binom(n + b * (n - j - r) + rho - 1 - i, n)
                for r in range(n + 2))
            return Fraction(total, bn)
    else:
        e = ((n - 1) * (-d)) % (b - 1) or (b - 1)

        def entry(i: int, j: int) -> Fraction:
            total = sum(
                (-1) ** r * math.comb(n + 1, r)
                * _count_binom(n + b * (j - r) + e - i, n)
                for r in range(j + 1))
            return Fraction(total, bn)

    return ExactMatrix([[entry(i, j) for j in range(m)] for i in range(m)])


def _digit_sum_counts(digit_set: list[int], n: int) -> dict[int, int]:
    """Counts of each value of x_1 + ... + x_n, by repeated convolution."""
    counts = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for total, c in counts.items():
            for x in digit_set:
                nxt[total + x] = nxt.get(total + x, 0) + c
        counts = nxt
    return counts


def _digit_sum_counts_naive(digit_set: list[int], n: int) -> dict[int, int]:
    """Second-tier oracle: direct enumeration of all |D|^n digit tuples."""
    counts: dict[int, int] = {}
    for tup in itertools.product(digit_set, repeat=n):
        s = sum(tup)
        counts[s] = counts.get(s, 0) + 1
    return counts


def transition_matrix_bruteforce(
    base: int,
    digit_set: list[int],
    n: int,
    *,
    naive: bool = False,
) -> tuple[list[int], ExactMatrix]:
    """Definition-level oracle: (states, matrix) for an arbitrary digit set.

    Computes the carry set reachable from 0 by closure, then counts the
    solutions of base*c' + a = c + sum(x) with digits and output digit drawn
    from the digit set. Requires 0 in the digit set and distinct residues
    mod |base|; residues the digit set cannot emit raise if ever needed.
    """
    if abs(base) < 2:
        raise ValueError(f"base magnitude must be >= 2, got {base}")
    if 0 not in digit_set:
        raise ValueError("digit set must contain 0")
    b = abs(base)
    residue = {}
    for a in digit_set:
        if a % b in residue:
            raise ValueError(
                f"digits {residue[a % b]} and {a} collide mod {b}")
        residue[a % b] = a

    counts = (_digit_sum_counts_naive if naive else _digit_sum_counts)(
        list(digit_set), n)

    def step(c: int, total: int) -> int:
        r = (c + total) % b
        if r not in residue:
            raise ValueError(
                f"no digit with residue {r} mod {b}; digit set is incomplete")
        return (c + total - residue[r]) // base

    cap = 10 * (max(abs(x) for x in digit_set) + b)
    states = {0}
    frontier = {0}
    while frontier:
        new = {step(c, total) for c in frontier for total in counts}
        frontier = new - states
        states |= frontier
        if len(states) > cap:
            raise RuntimeError("carry closure exceeded safety cap")
    ordered = sorted(states)
    index = {c: i for i, c in enumerate(ordered)}
    m = len(ordered)
    denom = len(digit_set) ** n
    rows = [[Fraction(0)] * m for _ in range(m)]
    for c in ordered:
        for total, w in counts.items():
            rows[index[c]][index[step(c, total)]] += Fraction(w, denom)
    return ordered, ExactMatrix(rows)


def find_system(n: int, p: Fraction) -> NumerationSystem:
    """A positive-base system whose n-summand chain has parameter p.

    For p = K/L in lowest terms (K >= L >= 1) takes b = (n-1)K + 1, d = -L.
    """
    p = Fraction(p)
    if n < 2:
        raise ValueError("need n >= 2; the construction degenerates at n=1")
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    k, l = p.numerator, p.denominator
    sys_ = NumerationSystem(base_magnitude=(n - 1) * k + 1, d=-l)
    got = p_param(ChainSpec(sys_, n))
    if got != p:
        raise RuntimeError(
            f"constructed system has p={got}, expected {p} (internal error)")
    return sys_
