"""Closed-form distance formulas: examples, properties, BFS equivalence."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gpdim.formulas import (
    FormulaDomainError,
    closed_form_distance,
    closed_form_oracle,
    clockwise_distance,
    cyclic_gap,
    gap_cost,
    split_residue,
    verify_formulas,
)
from gpdim.graph import VertexRef

U, V = VertexRef.u, VertexRef.v


def test_gap_cost_examples():
    assert gap_cost(0) == 0
    assert gap_cost(5) == 3
    assert gap_cost(6) == 2


@given(st.integers(min_value=0, max_value=10_000))
def test_gap_cost_quotient_form(L):
    m, i = divmod(L, 3)
    assert gap_cost(L) == m + i


def test_gap_cost_growth_with_slack_two():
    # Exhaustive on 0..400: L1 >= L2 + 2 implies gap_cost(L1) >= gap_cost(L2).
    values = [gap_cost(L) for L in range(401)]
    for L2 in range(399):
        assert min(values[L2 + 2 :]) >= values[L2]


def test_gap_cost_not_monotone():
    assert gap_cost(2) == 2
    assert gap_cost(3) == 1


def test_cyclic_gap_examples():
    assert cyclic_gap(1, 1, 39) == 0
    assert cyclic_gap(1, 39, 39) == 1
    assert cyclic_gap(1, 20, 38) == 19


def test_clockwise_examples():
    assert clockwise_distance(1, 39, 39) == 38
    assert clockwise_distance(39, 1, 39) == 1
    assert clockwise_distance(5, 5, 39) == 0


@given(st.integers(min_value=3, max_value=300), st.data())
def test_clockwise_roundtrip_sums_to_n(n, data):
    i = data.draw(st.integers(min_value=1, max_value=n))
    j = data.draw(st.integers(min_value=1, max_value=n))
    total = clockwise_distance(i, j, n) + clockwise_distance(j, i, n)
    assert total == (0 if i == j else n)


def test_subscript_range_checked():
    with pytest.raises(FormulaDomainError):
        cyclic_gap(0, 5, 39)
    with pytest.raises(FormulaDomainError):
        clockwise_distance(1, 40, 39)


def test_closed_form_examples():
    assert closed_form_distance(39, U(1), U(2)) == 1
    assert closed_form_distance(41, U(1), U(22)) == 9  # gap 3k+2 branch, k=6
    assert closed_form_distance(38, V(1), V(20)) == 9  # gap 3k+1, not 3k-1
    assert closed_form_distance(38, V(1), V(18)) == 7  # gap 3k-1 = 17 branch


def test_closed_form_symmetry(oracle):
    for n in (38, 39, 40, 41):
        for a, b in [(U(3), V(17)), (V(2), V(30)), (U(1), U(25))]:
            assert closed_form_distance(n, a, b) == closed_form_distance(n, b, a)


def test_domain_refusals():
    with pytest.raises(FormulaDomainError):
        split_residue(36)  # residue 0
    with pytest.raises(FormulaDomainError):
        split_residue(37)  # residue 1
    with pytest.raises(FormulaDomainError):
        closed_form_distance(20, U(1), U(2))  # k < 6
    with pytest.raises(FormulaDomainError):
        verify_formulas([36])


def test_unchecked_mode_computes_below_threshold():
    assert closed_form_distance(20, U(1), U(2), unchecked=True) == 1
    (check,) = verify_formulas([20], unchecked=True)
    assert check.pairs_checked == 40 * 40
    # Whatever the mismatch count, the report must carry it rather than raise.
    assert isinstance(check.mismatches, tuple)


def test_oracle_matches_scalar(oracle):
    o = closed_form_oracle(40)
    for a, b in [(U(1), U(21)), (U(7), V(1)), (V(5), V(25)), (V(3), V(3))]:
        assert o.distance(a, b) == closed_form_distance(40, a, b)


@pytest.mark.parametrize("n", [38, 39, 40, 41, 44, 45, 46, 47])
def test_closed_form_equals_bfs(n, oracle):
    assert np.array_equal(closed_form_oracle(n).matrix, oracle(n).matrix)


def test_verify_formulas_reports_zero_mismatches():
    for check in verify_formulas([38, 39, 40, 41]):
        assert check.ok
        assert check.pairs_checked == (2 * check.n) ** 2
