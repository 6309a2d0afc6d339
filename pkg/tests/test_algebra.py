import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from selfaffine.algebra import (
    CollinearDigitSet,
    DigitKind,
    LatticePoint,
    NotExpandingError,
    Quadratic,
    RootKind,
    apply_A,
    companion_matrix,
    is_expanding,
    min_eigen_modulus_at_least_two,
    mirror,
    require_expanding,
    spectral_data,
)

coef_b = st.integers(-50, 50)
coef_c = st.integers(-200, 200)


def roots(q):
    sq = cmath.sqrt(q.discriminant)
    return (-q.b + sq) / 2, (-q.b - sq) / 2


@given(coef_b, coef_c)
def test_expanding_matches_root_moduli(b, c):
    q = Quadratic(b, c)
    r1, r2 = roots(q)
    # integer coefficients keep roots either on |x| = 1 or well away from it
    expected = min(abs(r1), abs(r2)) > 1 + 1e-9
    assert is_expanding(q) == expected


@given(coef_b, coef_c)
def test_modulus_two_test_matches_roots(b, c):
    q = Quadratic(b, c)
    r1, r2 = roots(q)
    assert min_eigen_modulus_at_least_two(q) == (min(abs(r1), abs(r2)) >= 2 - 1e-9)


@given(coef_b, coef_c)
def test_cayley_hamilton(b, c):
    A = companion_matrix(Quadratic(b, c))
    assert not (A @ A + b * A + c * np.eye(2, dtype=np.int64)).any()


@given(coef_b, coef_c, st.integers(-100, 100), st.integers(-100, 100))
def test_apply_A_is_matrix_product(b, c, g, d):
    q = Quadratic(b, c)
    assert tuple(apply_A(q, (g, d))) == tuple(companion_matrix(q) @ np.array([g, d]))


@given(coef_b, coef_c)
def test_mirror_preserves_expanding_and_kind(b, c):
    q = Quadratic(b, c)
    assert is_expanding(q) == is_expanding(mirror(q))
    assert spectral_data(q) == spectral_data(mirror(q))
    assert mirror(mirror(q)) == q


def test_spectral_periods():
    assert spectral_data(Quadratic(3, 3)).period == 6
    assert spectral_data(Quadratic(-4, 8)).period == 4
    assert spectral_data(Quadratic(3, 9)).period == 3
    assert spectral_data(Quadratic(0, 7)).period == 2
    assert spectral_data(Quadratic(1, 5)).period is None
    assert spectral_data(Quadratic(-4, 4)).root_kind is RootKind.REAL_DOUBLE
    assert spectral_data(Quadratic(-10, 24)).root_kind is RootKind.REAL_DISTINCT


def test_require_expanding():
    require_expanding(Quadratic(-4, 4))
    for b, c in [(0, 1), (2, 1), (-3, 2), (0, -1), (1, 1)]:
        with pytest.raises(NotExpandingError):
            require_expanding(Quadratic(b, c))


def test_quadratic_str_and_eval():
    q = Quadratic(-4, 4)
    assert str(q) == "x^2-4x+4"
    assert q(2) == 0 and q.discriminant == 0


def test_lattice_point_arithmetic():
    p = LatticePoint(2, -1)
    assert p + (1, 1) == (3, 0)
    assert p - (1, 1) == (1, -2)
    assert -p == (-2, 1)
    assert p * 3 == (6, -3)


def test_digit_sets():
    d = CollinearDigitSet.consecutive(3)
    assert d.digits == (0, 1, 2, 3) and d.kind is DigitKind.CONSECUTIVE
    g = CollinearDigitSet.gap(3, 4, 2)
    assert g.digits == tuple(range(11)) + (13,) and g.kind is DigitKind.GAP
    assert CollinearDigitSet.gap(6, 4, 0).digits == tuple(range(24))
    f = CollinearDigitSet.from_digits([5, 3, 4, 3])
    assert f.digits == (0, 1, 2) and f.kind is DigitKind.CONSECUTIVE
    assert CollinearDigitSet.from_digits([0, 2, 3]).differences() == (-3, -2, -1, 0, 1, 2, 3)
    with pytest.raises(ValueError):
        CollinearDigitSet((1, 2))
    with pytest.raises(ValueError):
        CollinearDigitSet.gap(1, 4, 0)


@pytest.mark.parametrize("b,c,expected", [(-4, 4, True), (0, 1, False), (5, 4, False), (-2, -24, True)])
def test_expanding_examples(b, c, expected):
    assert is_expanding(Quadratic(b, c)) is expected


@pytest.mark.parametrize("b,c,expected", [(-10, 24, True), (-5, 5, False), (0, 4, True), (-4, 4, True)])
def test_modulus_two_examples(b, c, expected):
    assert min_eigen_modulus_at_least_two(Quadratic(b, c)) is expected


def test_apply_A_examples():
    assert apply_A(Quadratic(3, 7), (0, 0)) == (0, 0)
    assert apply_A(Quadratic(-4, 4), (1, 0)) == (0, 1)
    assert apply_A(Quadratic(-10, 24), (1, 1)) == (-24, 11)
