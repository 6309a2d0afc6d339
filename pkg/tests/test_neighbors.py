import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import MEMBER, NOT_MEMBER, search
from selfaffine.algebra import (
    CollinearDigitSet,
    NotExpandingError,
    Quadratic,
    ResourceLimitError,
    is_expanding,
)
from selfaffine.neighbors import (
    DifferenceSet,
    digit_graph_edges,
    enumerate_neighbors,
    hata_connected,
    is_member,
    state_box,
    survivor_set,
)


def test_difference_set():
    dd = DifferenceSet.of([0, 2, 5])
    assert dd.values == (-5, -3, -2, 0, 2, 3, 5)
    assert 3 in dd and 1 not in dd
    with pytest.raises(ValueError):
        DifferenceSet((0, 1))


def test_state_box_sizes():
    assert (state_box(Quadratic(-4, 4), DifferenceSet.consecutive(1)).gamma_max,
            state_box(Quadratic(-4, 4), DifferenceSet.consecutive(1)).delta_max) == (3, 1)
    box = state_box(Quadratic(-10, 24), DifferenceSet.consecutive(15))
    assert (box.gamma_max, box.delta_max) == (9, 1)


# frozen snapshot: lattice neighbors of T for x^2 - 4x + 4
SNAPSHOT = {
    1: [(-3, 1), (3, -1)],
    2: [(-6, 2), (-3, 1), (-2, 1), (-1, 0), (1, 0), (2, -1), (3, -1), (6, -2)],
}


@pytest.mark.parametrize("m", [1, 2])
def test_neighbor_snapshot(m):
    got = enumerate_neighbors(Quadratic(-4, 4), DifferenceSet.consecutive(m))
    assert [tuple(p) for p in got] == SNAPSHOT[m]


@st.composite
def small_cases(draw):
    b = draw(st.integers(-6, 6))
    c = draw(st.integers(-12, 12).filter(lambda c: is_expanding(Quadratic(b, c))))
    m = draw(st.integers(1, 4))
    return Quadratic(b, c), DifferenceSet.consecutive(m)


@settings(max_examples=60, deadline=None)
@given(small_cases())
def test_rounds_and_worklist_agree(case):
    q, dd = case
    a = survivor_set(q, dd, method="rounds")
    w = survivor_set(q, dd, method="worklist")
    assert (a.alive == w.alive).all()


@settings(max_examples=60, deadline=None)
@given(small_cases())
def test_survivors_symmetric_and_mirrored(case):
    q, dd = case
    pts = set(survivor_set(q, dd))
    assert (0, 0) in pts
    assert all((-g, -d) in pts for g, d in pts)
    mirrored = set(survivor_set(Quadratic(-q.b, q.c), dd))
    assert mirrored == {(g, -d) for g, d in pts}


@settings(max_examples=40, deadline=None)
@given(small_cases())
def test_membership_monotone_in_m(case):
    q, dd = case
    small = set(survivor_set(q, dd))
    big = survivor_set(q, DifferenceSet.consecutive(dd.max_abs + 1))
    assert all(p in big for p in small)


@pytest.mark.parametrize("b,c", [(-4, 4), (-10, 24)])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_bruteforce_membership(b, c, m):
    q = Quadratic(b, c)
    dd = DifferenceSet.consecutive(m)
    surv = survivor_set(q, dd)
    box = surv.box
    resolved = 0
    for g in range(-box.gamma_max, box.gamma_max + 1):
        for d in range(-box.delta_max, box.delta_max + 1):
            r = search(b, c, dd.values, (g, d), depth=20)
            if r == MEMBER:
                assert (g, d) in surv
            elif r == NOT_MEMBER:
                assert (g, d) not in surv
            resolved += r != "unresolved"
    # at depth 20 every box point is settled one way or the other
    assert resolved == box.size


def test_is_member_outside_box():
    assert not is_member(Quadratic(-4, 4), DifferenceSet.consecutive(1), (100, 0))
    assert is_member(Quadratic(-4, 4), DifferenceSet.consecutive(2), (1, 0))


def test_resource_cap():
    with pytest.raises(ResourceLimitError):
        survivor_set(Quadratic(-10, 24), DifferenceSet.consecutive(15), max_states=10)


def test_not_expanding_rejected():
    with pytest.raises(NotExpandingError):
        survivor_set(Quadratic(0, 1), DifferenceSet.consecutive(1))


def test_hata_graph():
    q = Quadratic(-4, 4)
    assert hata_connected(q, CollinearDigitSet.consecutive(2))
    assert not hata_connected(q, CollinearDigitSet.consecutive(1))
    assert hata_connected(q, CollinearDigitSet.consecutive(0))
    assert digit_graph_edges(q, CollinearDigitSet.consecutive(2)) == [(0, 1), (1, 2)]
    assert not hata_connected(q, [0, 1, 2, 5])
