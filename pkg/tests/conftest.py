import pytest

from selfaffine.algebra import Quadratic, is_expanding


def expanding_grid(b_max=10, c_max=30):
    """All expanding (b, c) with |b| <= b_max, 2 <= |c| <= c_max."""
    return [Quadratic(b, c)
            for b in range(-b_max, b_max + 1)
            for c in range(-c_max, c_max + 1)
            if abs(c) >= 2 and is_expanding(Quadratic(b, c))]


@pytest.fixture(scope="session")
def grid():
    return expanding_grid()
