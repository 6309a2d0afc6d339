"""Exact lattice oracle for T - T.

A lattice point l lies in T - T exactly when it admits an expansion
l = sum_{i>=1} b_i A^{-i} v with every b_i a digit difference. Multiplying by A
and peeling off b_1 gives the one-step map

    (gamma, delta) -> (-c delta - b_1, gamma - b delta),

and every point of T - T stays inside a fixed box. So l is in T - T iff it
starts an infinite walk inside the box, i.e. iff it survives the greatest
fixed point computation below.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import floor
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy import ndimage

from .algebra import (
    CollinearDigitSet,
    LatticePoint,
    Quadratic,
    ResourceLimitError,
    require_expanding,
)
from .series import tilde_sums

MAX_STATES = 10**7


@dataclass(frozen=True)
class DifferenceSet:
    """Symmetric set of integer digit differences D - D."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(sorted(set(self.values)))
        if not vals:
            raise ValueError("empty difference set")
        if 0 not in vals or any(-v not in vals for v in vals):
            raise ValueError("difference set must contain 0 and be symmetric")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, digits: Iterable[int]) -> "DifferenceSet":
        ds = list(digits)
        if not ds:
            raise ValueError("empty digit set")
        return cls(tuple({a - b for a in ds for b in ds}))

    @classmethod
    def consecutive(cls, m: int) -> "DifferenceSet":
        return cls(tuple(range(-m, m + 1)))

    @property
    def max_abs(self) -> int:
        return self.values[-1]

    def __contains__(self, d) -> bool:
        return d in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def _as_differences(dd) -> DifferenceSet:
    if isinstance(dd, DifferenceSet):
        return dd
    if isinstance(dd, CollinearDigitSet):
        return DifferenceSet.of(dd.digits)
    return DifferenceSet(tuple(dd))


@dataclass(frozen=True)
class StateBox:
    gamma_max: int
    delta_max: int

    @property
    def shape(self) -> tuple[int, int]:
        return 2 * self.delta_max + 1, 2 * self.gamma_max + 1

    @property
    def size(self) -> int:
        return (2 * self.gamma_max + 1) * (2 * self.delta_max + 1)

    def __contains__(self, point) -> bool:
        g, d = point
        return abs(g) <= self.gamma_max and abs(d) <= self.delta_max


def state_box(q: Quadratic, dd) -> StateBox:
    """|gamma| <= max|d| * alpha_tilde, |delta| <= max|d| * beta_tilde."""
    dd = _as_differences(dd)
    sb = tilde_sums(q)
    k = dd.max_abs
    return StateBox(floor(k * sb.alpha_tilde), floor(k * sb.beta_tilde))


def transition(q: Quadratic, s: Sequence[int], d: int) -> LatticePoint:
    gamma, delta = s
    return LatticePoint(-q.c * delta - d, gamma - q.b * delta)


@dataclass(frozen=True)
class SurvivorSet:
    """Lattice points of T - T, stored as a read-only mask over the box.

    ``alive[delta + delta_max, gamma + gamma_max]`` is True for survivors.
    """

    q: Quadratic
    differences: DifferenceSet
    box: StateBox
    alive: np.ndarray
    rounds: int

    def __contains__(self, point) -> bool:
        g, d = point
        if (g, d) not in self.box:
            return False
        return bool(self.alive[d + self.box.delta_max, g + self.box.gamma_max])

    def __iter__(self) -> Iterator[LatticePoint]:
        ds, gs = np.nonzero(self.alive)
        pts = sorted(zip((gs - self.box.gamma_max).tolist(), (ds - self.box.delta_max).tolist()))
        return (LatticePoint(g, d) for g, d in pts)

    def __len__(self):
        return int(self.alive.sum())

    def points(self) -> list[LatticePoint]:
        return list(self)


def _check_size(box: StateBox, max_states: int) -> None:
    if box.size > max_states:
        raise ResourceLimitError(
            f"state box {box.shape[1]}x{box.shape[0]} = {box.size} states exceeds cap {max_states}"
        )


def _prune_rounds(q: Quadratic, dd: DifferenceSet, box: StateBox) -> tuple[np.ndarray, int]:
    G, H = box.gamma_max, box.delta_max
    K = dd.max_abs
    delta, gamma = np.mgrid[-H : H + 1, -G : G + 1]
    # successor row index (delta') and the target column -c*delta before the digit is subtracted
    nd = gamma - q.b * delta
    target = -q.c * delta
    valid = (np.abs(nd) <= H) & (np.abs(target) <= G + K)
    rows = np.where(valid, nd + H, 0)
    cols = np.where(valid, target + G + K, 0)
    kernel = np.zeros(2 * K + 1, dtype=np.int32)
    kernel[np.asarray(dd.values) + K] = 1

    alive = valid.copy()
    rounds = 0
    while True:
        rounds += 1
        padded = np.zeros((2 * H + 1, 2 * G + 2 * K + 1), dtype=np.int32)
        padded[:, K : K + 2 * G + 1] = alive
        # reach[row, t] = some d in dd with alive[row, t - d]
        reach = ndimage.convolve1d(padded, kernel, axis=1, mode="constant") > 0
        nxt = alive & valid & reach[rows, cols]
        if np.array_equal(nxt, alive):
            return alive, rounds
        alive = nxt


def _prune_worklist(q: Quadratic, dd: DifferenceSet, box: StateBox) -> tuple[np.ndarray, int]:
    G, H = box.gamma_max, box.delta_max
    states = [(g, d) for d in range(-H, H + 1) for g in range(-G, G + 1)]
    succ_count = {}
    preds: dict[tuple, list] = {s: [] for s in states}
    for s in states:
        n = 0
        for dig in dd.values:
            t = transition(q, s, dig)
            if t in box:
                preds[tuple(t)].append(s)
                n += 1
        succ_count[s] = n
    alive = {s: True for s in states}
    work = deque(s for s in states if succ_count[s] == 0)
    removed = 0
    while work:
        s = work.popleft()
        if not alive[s]:
            continue
        alive[s] = False
        removed += 1
        for p in preds[s]:
            if alive[p]:
                succ_count[p] -= 1
                if succ_count[p] == 0:
                    work.append(p)
    mask = np.zeros(box.shape, dtype=bool)
    for (g, d), a in alive.items():
        mask[d + H, g + G] = a
    return mask, removed


def survivor_set(q: Quadratic, dd, *, method: str = "rounds", max_states: int = MAX_STATES) -> SurvivorSet:
    """Greatest set of box states each having a digit step back into the set.

    ``method="rounds"`` prunes the whole box in vectorized sweeps;
    ``method="worklist"`` removes states one at a time through a predecessor
    map. Both reach the same (unique) greatest fixed point.
    """
    require_expanding(q)
    dd = _as_differences(dd)
    box = state_box(q, dd)
    _check_size(box, max_states)
    if method == "rounds":
        alive, rounds = _prune_rounds(q, dd, box)
    elif method == "worklist":
        alive, rounds = _prune_worklist(q, dd, box)
    else:
        raise ValueError(f"unknown method {method!r}")
    alive = alive.copy()
    alive.setflags(write=False)
    return SurvivorSet(q, dd, box, alive, rounds)


def is_member(q: Quadratic, dd, point, **kw) -> bool:
    """Is gamma v + delta Av in T - T?"""
    require_expanding(q)
    dd = _as_differences(dd)
    if tuple(point) not in state_box(q, dd):
        return False
    return tuple(point) in survivor_set(q, dd, **kw)


def enumerate_neighbors(q: Quadratic, dd, **kw) -> list[LatticePoint]:
    """Nonzero lattice points l with T and T + l intersecting, sorted."""
    return [p for p in survivor_set(q, dd, **kw) if p != (0, 0)]


def digit_graph_edges(q: Quadratic, digits, survivors: SurvivorSet | None = None) -> list[tuple[int, int]]:
    ds = digits.digits if isinstance(digits, CollinearDigitSet) else tuple(sorted(set(digits)))
    if survivors is None:
        survivors = survivor_set(q, DifferenceSet.of(ds))
    return [(a, b) for i, a in enumerate(ds) for b in ds[i + 1 :] if (b - a, 0) in survivors]


def hata_connected(q: Quadratic, digits, **kw) -> bool:
    """Connectedness of T(A, D v) through the intersection graph of its pieces.

    Pieces for digits a and b meet iff (b - a) v lies in T - T; T is connected
    iff the graph with these edges is connected.
    """
    require_expanding(q)
    ds = digits.digits if isinstance(digits, CollinearDigitSet) else tuple(sorted(set(digits)))
    if len(ds) == 1:
        return True
    survivors = survivor_set(q, DifferenceSet.of(ds), **kw)
    parent = {d: d for d in ds}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in digit_graph_edges(q, ds, survivors):
        parent[find(a)] = find(b)
    return len({find(d) for d in ds}) == 1
