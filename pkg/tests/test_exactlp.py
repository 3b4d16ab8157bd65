from fractions import Fraction

import pytest

from conepol.exactlp import LPInfeasible, LPUnbounded, max_min_slack, simplex_max


def test_simple_lp():
    value, x = simplex_max([1, 1], [[1, 2], [1, 0]], [4, 3])
    assert value == Fraction(7, 2)
    assert x == [Fraction(3), Fraction(1, 2)]


def test_phase_one_needed():
    # minimize x subject to x >= 1 (as max -x with -x <= -1)
    value, x = simplex_max([-1], [[-1]], [-1])
    assert value == -1
    assert x == [Fraction(1)]


def test_infeasible():
    with pytest.raises(LPInfeasible):
        simplex_max([1], [[1], [-1]], [-2, 1])  # x <= -2 and x >= -1


def test_unbounded():
    with pytest.raises(LPUnbounded):
        simplex_max([1], [[-1]], [0])


def test_max_min_slack():
    value, w = max_min_slack([[1], [-1]], [5, 3])
    assert value == 4
    assert w == [Fraction(-1)]


def test_max_min_slack_degenerate_no_freedom():
    value, w = max_min_slack([[], []], [7, 2])
    assert value == 2
    assert w == []
