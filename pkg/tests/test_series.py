from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from selfaffine.algebra import Quadratic, is_expanding
from selfaffine.series import (
    Exactness,
    alpha_beta,
    alpha_beta_closed,
    alpha_tilde_formula,
    block_tilde_sums,
    partial_abs_sums,
    tail_bound,
    tilde_sums,
)


def inverse_power_oracle(b, c, i):
    """A^{-i} v by exact rational matrix inversion."""
    A = sympy.Matrix([[0, -c], [1, -b]])
    x = (A.inv() ** i) * sympy.Matrix([1, 0])
    return Fraction(str(x[0])), Fraction(str(x[1]))


@pytest.mark.parametrize("b,c", [(-4, 4), (-10, 24), (3, 3), (1, 5), (0, -7), (-2, -24)])
def test_sequence_matches_matrix_inverse(b, c):
    q = Quadratic(b, c)
    for i in (1, 2, 3, 7, 15):
        assert alpha_beta(q, i) == inverse_power_oracle(b, c, i)


def test_first_terms():
    q = Quadratic(-10, 24)
    assert alpha_beta(q, 1) == (Fraction(10, 24), Fraction(-1, 24))
    assert alpha_beta(q, 2) == (Fraction(100 - 24, 576), Fraction(-10, 576))
    # follows from the recurrence; matches the matrix oracle above
    assert alpha_beta(q, 3)[0] == Fraction(65, 1728)


expanding_small = st.tuples(st.integers(-12, 12), st.integers(-40, 40)).filter(
    lambda t: is_expanding(Quadratic(*t)) and t[0] ** 2 != 4 * t[1]
)


@given(expanding_small)
def test_closed_form_matches_recurrence(bc):
    q = Quadratic(*bc)
    for i in range(1, 61):
        exact = alpha_beta(q, i)
        closed = alpha_beta_closed(q, i)
        # terms that vanish exactly are compared against the term magnitude rho^i
        floor = abs(q.c) ** (-i / 2) * 1e-3
        for e, f in zip(exact, closed):
            assert abs(float(e) - f) <= 1e-9 * max(abs(float(e)), floor)


def test_closed_form_rejects_double_root():
    with pytest.raises(ValueError):
        alpha_beta_closed(Quadratic(-4, 4), 1)


def test_partial_sums_bracket_tilde(grid):
    for q in grid:
        sb = tilde_sums(q)
        sa, sbeta = partial_abs_sums(q, 200)
        ta, tb = tail_bound(q, 200)
        assert sa <= sb.alpha_tilde and sbeta <= sb.beta_tilde
        slack = 0 if sb.exact else 1e-11
        assert float(sb.alpha_tilde - sa) <= ta * (1 + 1e-9) + slack * float(sb.alpha_tilde)
        assert float(sb.beta_tilde - sbeta) <= tb * (1 + 1e-9) + slack * float(sb.beta_tilde)


# at least three parameter choices per printed closed form
FORMULA_CASES = {
    "real, c > 0": [(-4, 4), (-10, 24), (5, 6), (-7, 12)],
    "real, c < 0": [(-2, -24), (1, -6), (0, -5), (3, -10)],
    "b^2 = 3c": [(3, 3), (-6, 12), (9, 27)],
    "b^2 = 2c": [(2, 2), (-4, 8), (6, 18)],
    "b^2 = c": [(2, 4), (-3, 9), (4, 16)],
    "b = 0": [(0, 2), (0, 5), (0, 9)],
}


@pytest.mark.parametrize("family", FORMULA_CASES)
def test_printed_alpha_tilde_formulas(family):
    for b, c in FORMULA_CASES[family]:
        q = Quadratic(b, c)
        at = alpha_tilde_formula(q)
        s, _ = partial_abs_sums(q, 200)
        assert s <= at
        assert float(at - s) <= tail_bound(q, 200)[0] * (1 + 1e-9)


@pytest.mark.parametrize("b,c", [(3, 3), (-6, 12), (2, 2), (4, 8), (2, 4), (-3, 9), (0, 2), (0, 11)])
def test_block_method_agrees_with_formula(b, c):
    q = Quadratic(b, c)
    alpha, beta = block_tilde_sums(q)
    assert alpha == alpha_tilde_formula(q)
    assert beta == tilde_sums(q).beta_tilde


def test_beta_tilde_at_three_three():
    assert tilde_sums(Quadratic(3, 3)).beta_tilde == Fraction(14, 13)
    assert tilde_sums(Quadratic(-3, 3)).beta_tilde == Fraction(14, 13)


def test_known_alpha_tilde_values():
    assert tilde_sums(Quadratic(6, 12)).alpha_tilde == Fraction(1237, 1727)
    assert tilde_sums(Quadratic(-4, 4)).alpha_tilde == 3
    assert tilde_sums(Quadratic(-10, 24)).alpha_tilde == Fraction(9, 15)


def test_generic_complex_is_upper_bound():
    q = Quadratic(1, 5)
    sb = tilde_sums(q)
    assert sb.exactness is Exactness.UPPER_BOUND
    sa, sbeta = partial_abs_sums(q, 400)
    assert sa <= sb.alpha_tilde <= sa * (1 + Fraction(1, 10**10))
    assert sbeta <= sb.beta_tilde


def test_tilde_sums_symmetric(grid):
    for q in grid:
        assert tilde_sums(q) == tilde_sums(Quadratic(-q.b, q.c))
