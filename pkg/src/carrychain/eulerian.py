"""Generalized Eulerian triangles and the arrays that diagonalize carry chains.

For a rational parameter p >= 1 the generalized Eulerian numbers E_p(n, k)
form a triangle (p = 1 is the classical one, p = 2 the MacMahon numbers).
They sit as row 0 of an (n+1) x (n+2) array v[i][j] whose rows, restricted to
the state-space width, are the left eigenvectors of the n-summand carry chain
with parameter p.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def v_closed(n: int, p, i: int, j: int) -> Fraction:
    """Array entry v[i][j]: alternating binomial sum of (p(j-r)+1)^(n-i).

    Exact for rational p. Valid for 0 <= i <= n and -1 <= j <= n+1, with
    j = -1 giving 0 by convention; j = n+1 always evaluates to 0.
    """
    if not 0 <= i <= n:
        raise ValueError(f"row index i={i} outside 0..{n}")
    if not -1 <= j <= n + 1:
        raise ValueError(f"column index j={j} outside -1..{n + 1}")
    if j == -1:
        return Fraction(0)
    p = Fraction(p)
    return sum(
        ((-1) ** r * comb(n + 1, r) * (p * (j - r) + 1) ** (n - i)
         for r in range(j + 1)),
        Fraction(0))


def eulerian_array(n: int, p) -> list[list[Fraction]]:
    """The full (n+1) x (n+2) array; the extra last column is all zeros."""
    return [[v_closed(n, p, i, j) for j in range(n + 2)] for i in range(n + 1)]


def triangle_recurrence(n_max: int, p) -> list[list[Fraction]]:
    """Rows 0..n_max of the triangle E_p, each row of length n+1.

    Built bottom-up from E_p(0, 0) = 1 by the two-term recurrence
    E_p(n, k) = (pk+1) E_p(n-1, k) + (p(n+1-k)-1) E_p(n-1, k-1),
    independent of the closed form (and cross-checked against it in tests).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    p = Fraction(p)
    rows = [[Fraction(1)]]
    for n in range(1, n_max + 1):
        prev = rows[-1] + [Fraction(0)]
        rows.append([
            (p * k + 1) * prev[k]
            + ((p * (n + 1 - k) - 1) * prev[k - 1] if k else Fraction(0))
            for k in range(n + 1)
        ])
    return rows


def array_recurrence_check(n: int, p) -> list[tuple[int, int]]:
    """Index pairs (i, j) where the array recurrence fails; expected empty.

    Checks v[i][j](n) = (p(n+1-j) - 1) v[i][j-1](n-1) + (pj+1) v[i][j](n-1)
    for all 0 <= i <= n-1 and 0 <= j <= n.
    """
    if n < 1:
        raise ValueError(f"need n >= 1 to compare with n-1, got {n}")
    p = Fraction(p)
    bad = []
    for i in range(n):
        for j in range(n + 1):
            lhs = v_closed(n, p, i, j)
            rhs = ((p * (n + 1 - j) - 1) * v_closed(n - 1, p, i, j - 1)
                   + (p * j + 1)
                   * (v_closed(n - 1, p, i, j) if j <= n else Fraction(0)))
            if lhs != rhs:
                bad.append((i, j))
    return bad


def row_sums(n: int, p) -> list[Fraction]:
    """Sum over j of v[i][j] for each i: p^n n! at i = 0 and 0 for i > 0."""
    return [sum((v_closed(n, p, i, j) for j in range(n + 2)), Fraction(0))
            for i in range(n + 1)]


def conjugate_parameter(p) -> Fraction:
    """The p* with 1/p + 1/p* = 1, pairing a triangle with its reflection."""
    p = Fraction(p)
    if p <= 1:
        raise ValueError(f"no finite conjugate for p={p}; need p > 1")
    return p / (p - 1)


def symmetry_check(n: int, p) -> list[tuple[int, int]]:
    """Index pairs where the reflection identity fails; expected empty.

    For p = 1: v[i][n-1-j] = (-1)^i v[i][j] over 0 <= i, j <= n-1, the
    index square that actually enters the n-state eigenvector matrix (the
    identity genuinely fails on the extra row i = n).
    For p > 1: v*[i][n-j] = (-1)^i (p*/p)^(n-i) v[i][j] over 0 <= i, j <= n,
    where v* is the array of the conjugate parameter p*.
    """
    p = Fraction(p)
    bad = []
    if p == 1:
        for i in range(n):
            for j in range(n):
                if v_closed(n, 1, i, n - 1 - j) != (-1) ** i * v_closed(n, 1, i, j):
                    bad.append((i, j))
        return bad
    ps = conjugate_parameter(p)
    for i in range(n + 1):
        for j in range(n + 1):
            lhs = v_closed(n, ps, i, n - j)
            rhs = (-1) ** i * (ps / p) ** (n - i) * v_closed(n, p, i, j)
            if lhs != rhs:
                bad.append((i, j))
    return bad


def stationary(n: int, p) -> list[Fraction]:
    """Stationary probabilities of the n-summand chain with parameter p.

    The top array row divided by p^n n!. Length n+1 for p > 1; for p = 1
    the final entry is the trailing zero of the triangle, so the vector
    truncates to the n genuine states.
    """
    p = Fraction(p)
    total = p ** n * factorial(n)
    m = n + 1 if p != 1 else n
    return [v_closed(n, p, 0, j) / total for j in range(m)]
