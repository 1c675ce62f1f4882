"""Tests for carry-chain state spaces, parameters, and transition matrices."""

from fractions import Fraction

import pytest

from carrychain.carries import (
    ChainSpec,
    find_system,
    p_param,
    state_space,
    transition_matrix,
    transition_matrix_bruteforce,
)
from carrychain.exactmath import ExactMatrix
from carrychain.numeration import NumerationSystem


def spec(b, d, n, negative=False):
    return ChainSpec(NumerationSystem(b, d, negative=negative), n)


def frac_matrix(rows, denom):
    return ExactMatrix([[Fraction(x, denom) for x in row] for row in rows])


def test_state_space_examples():
    assert state_space(spec(3, -1, 2)).states == [-1, 0, 1]
    assert state_space(spec(10, 0, 4)).states == [0, 1, 2, 3]
    assert state_space(spec(3, -1, 2, negative=True)).states == [-1, 0, 1]


def test_state_space_size_rule():
    # n+1 states when (n-1)l is fractional, n states when integral.
    assert state_space(spec(3, -1, 2)).size == 3        # l = -1/2
    assert state_space(spec(3, -1, 3)).size == 3        # (n-1)l = -1
    assert state_space(spec(10, 0, 7)).size == 7        # l = 0


def test_p_param_examples():
    assert p_param(spec(3, -1, 2)) == 2
    assert p_param(spec(6, -3, 2)) == Fraction(5, 3)
    assert p_param(spec(10, 0, 3)) == 1
    assert p_param(spec(3, -1, 3)) == 1


def test_p_param_negative_base():
    assert p_param(spec(3, -1, 2, negative=True)) == 2


def test_transition_matrix_reference_p2_systems():
    assert transition_matrix(spec(3, -1, 2)) == frac_matrix(
        [[3, 6, 0], [1, 7, 1], [0, 6, 3]], 9)
    assert transition_matrix(spec(5, -1, 3)) == frac_matrix(
        [[10, 80, 35, 0], [4, 68, 52, 1], [1, 52, 68, 4], [0, 35, 80, 10]],
        125)


def test_transition_matrix_reference_p53_system():
    assert transition_matrix(spec(6, -3, 2)) == frac_matrix(
        [[10, 25, 1], [6, 27, 3], [3, 27, 6]], 36)


def test_transition_matrix_rows_stochastic():
    for s in (spec(7, -1, 4), spec(11, -3, 3), spec(4, -2, 3, negative=True)):
        P = transition_matrix(s)
        assert P.row_sums() == [1] * P.rows
        assert all(x >= 0 for row in P.to_lists() for x in row)


def test_entry_denominators_divide_base_power():
    s = spec(5, -2, 3)
    P = transition_matrix(s)
    for row in P.to_lists():
        for x in row:
            assert 125 % x.denominator == 0


def test_bruteforce_classical_two_summands():
    states, P = transition_matrix_bruteforce(10, list(range(10)), 2)
    assert states == [0, 1]
    assert P == frac_matrix([[55, 45], [45, 55]], 100)


def test_bruteforce_matches_formula_small_grid():
    for negative in (False, True):
        for b in range(2, 7):
            for d in range(-(b - 1), 1):
                for n in range(1, 4):
                    s = spec(b, d, n, negative=negative)
                    states, P = transition_matrix_bruteforce(
                        s.system.base, s.system.digits, n)
                    assert states == state_space(s).states, (b, d, n, negative)
                    assert P == transition_matrix(s), (b, d, n, negative)


def test_bruteforce_naive_path_agrees():
    states, P = transition_matrix_bruteforce(5, [-1, 0, 1, 2, 3], 3)
    naive_states, naive_P = transition_matrix_bruteforce(
        5, [-1, 0, 1, 2, 3], 3, naive=True)
    assert states == naive_states
    assert P == naive_P


def test_bruteforce_sparse_digit_set():
    # Non-consecutive digits blow the state space past n+1.
    states, P = transition_matrix_bruteforce(3, [-1, 0, 4], 2)
    assert states == list(range(-2, 5))
    assert P.row_sums() == [1] * 7


def test_bruteforce_sparse_digit_char_poly():
    from carrychain.exactmath import ExactPolynomial, char_poly

    _, P = transition_matrix_bruteforce(3, [-1, 0, 4], 2)
    quotient = char_poly(P)
    for root in (Fraction(1), Fraction(1, 3), Fraction(1, 9)):
        quotient, rem = quotient.divmod(ExactPolynomial([-root, 1]))
        assert not rem
    # Remaining quartic factor, cleared of denominators:
    assert [c * 2187 for c in quotient.coefficients] == [1, -30, -405, 0, 2187]


def test_bruteforce_input_validation():
    with pytest.raises(ValueError):
        transition_matrix_bruteforce(3, [1, 2, 3], 2)      # missing 0
    with pytest.raises(ValueError):
        transition_matrix_bruteforce(3, [0, 1, 4], 2)      # residue collision
    with pytest.raises(ValueError):
        transition_matrix_bruteforce(1, [0], 2)


def test_find_system_examples():
    sys_ = find_system(3, Fraction(5, 3))
    assert (sys_.base, sys_.d) == (11, -3)
    sys_ = find_system(2, 2)
    assert (sys_.base, sys_.d) == (3, -1)
    sys_ = find_system(4, 2)
    assert (sys_.base, sys_.d) == (7, -1)


def test_find_system_realizes_p():
    for n in (2, 3, 5):
        for p in (Fraction(1), Fraction(2), Fraction(7, 4), Fraction(9, 5)):
            sys_ = find_system(n, p)
            assert p_param(ChainSpec(sys_, n)) == p


def test_find_system_rejects_degenerate_inputs():
    with pytest.raises(ValueError):
        find_system(1, 2)
    with pytest.raises(ValueError):
        find_system(3, Fraction(1, 2))


def test_matrix_depends_only_on_shift_class():
    # Same (b, n, p) forces the same matrix even for different least digits.
    a = transition_matrix(spec(3, -1, 3))
    b = transition_matrix(spec(3, 0, 3))
    assert p_param(spec(3, -1, 3)) == p_param(spec(3, 0, 3)) == 1
    assert a == b
