"""Depth-limited digit-string search for lattice points of T - T.

Independent of the box/fixed-point machinery: states are pruned by a
Euclidean radius (sum of |A^{-j} v|), and membership is certified only when a
state repeats along the current digit string, which yields a periodic
expansion.
"""

import numpy as np

MEMBER, NOT_MEMBER, UNRESOLVED = "member", "not member", "unresolved"


def euclidean_radius(b, c, kmax, terms=4000):
    Ainv = np.linalg.inv(np.array([[0.0, -c], [1.0, -b]]))
    x = np.array([1.0, 0.0])
    total = 0.0
    for _ in range(terms):
        x = Ainv @ x
        total += float(np.hypot(*x))
    return kmax * total * (1 + 1e-9) + 1e-9


def search(b, c, diffs, point, depth=20):
    radius = euclidean_radius(b, c, max(diffs))
    dead = {}  # state -> smallest remaining depth already shown to fail
    on_path = set()

    def walk(s, remaining):
        if np.hypot(*s) > radius:
            return NOT_MEMBER
        if s in on_path:
            return MEMBER
        if remaining == 0:
            return UNRESOLVED
        if dead.get(s, depth + 1) <= remaining:
            return NOT_MEMBER
        on_path.add(s)
        outcome = NOT_MEMBER
        g, d = s
        for e in diffs:
            r = walk((-c * d - e, g - b * d), remaining - 1)
            if r == MEMBER:
                outcome = MEMBER
                break
            if r == UNRESOLVED:
                outcome = UNRESOLVED
        on_path.discard(s)
        if outcome == NOT_MEMBER:
            dead[s] = remaining
        return outcome

    return walk(tuple(point), depth)
