"""Closed-form connectedness criteria and explicit expansions of v.

For D = {0, 1, ..., m} the attractor is connected iff v is in T - T, and the
known criteria say this happens iff m reaches an integer threshold depending
only on (b, c). Outside the proven regimes the classifier answers UNKNOWN;
``conjecture_threshold`` gives the conjectured value, always marked unproven.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .algebra import (
    Quadratic,
    RootKind,
    is_expanding,
    min_eigen_modulus_at_least_two,
    mirror,
    require_expanding,
    spectral_data,
)
from .neighbors import DifferenceSet, state_box, transition


class Status(enum.Enum):
    CONNECTED = "Connected"
    DISCONNECTED = "Disconnected"
    UNKNOWN = "Unknown"


class Source(enum.Enum):
    REAL_ROOTS = "real-root criterion"
    COMPLEX_ANGLE = "complex special-angle criterion"
    GAP_DIGITS = "gap-digit criterion"
    CONJECTURE = "conjecture"
    ORACLE = "lattice oracle"


@dataclass(frozen=True)
class Verdict:
    status: Status
    source: Source | None = None
    threshold: int | None = None
    note: str = ""

    @property
    def proven(self) -> bool:
        return self.status is not Status.UNKNOWN and self.source not in (None, Source.CONJECTURE)

    @property
    def connected(self) -> bool | None:
        if self.status is Status.UNKNOWN:
            return None
        return self.status is Status.CONNECTED

    def __str__(self):
        if self.status is Status.UNKNOWN and self.source is None:
            return f"Unknown ({self.note})" if self.note else "Unknown"
        bits = [self.source.value if self.source else ""]
        if self.threshold is not None:
            label = "s-limit" if self.source is Source.GAP_DIGITS else "threshold"
            bits.append(f"{label} {self.threshold}")
        if self.note:
            bits.append(self.note)
        return f"{self.status.value} ({', '.join(b for b in bits if b)})"


def _by_threshold(m: int, threshold: int, source: Source, note: str = "") -> Verdict:
    status = Status.CONNECTED if m >= threshold else Status.DISCONNECTED
    return Verdict(status, source, threshold, note)


def proven_threshold(q: Quadratic) -> tuple[int, Source] | None:
    """Minimal m with {0..m} connected, where a proof covers (b, c)."""
    require_expanding(q)
    b, c = abs(q.b), q.c
    sd = spectral_data(q)
    if sd.root_kind is not RootKind.COMPLEX:
        if not min_eigen_modulus_at_least_two(q):
            return None
        if c == 4:
            return 2, Source.REAL_ROOTS
        if c > 0:
            return max(c - b + 1, b - 1), Source.REAL_ROOTS
        return -c - b - 1, Source.REAL_ROOTS
    if sd.period == 6:
        return max(c - b + 1, b - 1), Source.COMPLEX_ANGLE
    if sd.period in (4, 3):
        return c - b + 1, Source.COMPLEX_ANGLE
    if sd.period == 2:
        return c - 1, Source.COMPLEX_ANGLE
    return None


class ConjecturedThreshold(NamedTuple):
    threshold: int
    unproven: bool = True


def conjecture_threshold(q: Quadratic) -> ConjecturedThreshold:
    """Conjectured minimal m for any expanding (b, c). Not a theorem."""
    require_expanding(q)
    b, c = abs(q.b), q.c
    if c == 4 and b == 4:
        t = 2
    elif c > 0 and b >= 2:
        t = max(c - b + 1, b - 1)
    elif c > 0:
        t = c - 1
    else:
        t = max(-c - b - 1, b + 1)
    return ConjecturedThreshold(t)


def classify_consecutive(q: Quadratic, m: int, conjecture: bool = False) -> Verdict:
    """Verdict for D = {0, 1, ..., m}.

    Proven regimes: real roots with both moduli >= 2, and complex roots with
    b^2 in {3c, 2c, c, 0}. Elsewhere the result is UNKNOWN unless
    ``conjecture`` is set, in which case the conjectured threshold decides and
    the verdict is tagged as conjectured.
    """
    require_expanding(q)
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return Verdict(Status.CONNECTED, None, 0, "single point")
    proven = proven_threshold(q)
    if proven is not None:
        return _by_threshold(m, *proven)
    ct = conjecture_threshold(q)
    if conjecture:
        return _by_threshold(m, ct.threshold, Source.CONJECTURE, "conjectured, unproven")
    return Verdict(Status.UNKNOWN, None, None, "no theorem applies; see --conjecture or oracle")


def gap_polynomial(p: int, q_: int) -> Quadratic:
    return Quadratic(-(p + q_), p * q_)


_SPECIAL_GAP = {(4, 4), (-4, 4), (7, 12), (-7, 12)}


def classify_nonconsecutive(p: int, q_: int, s: int) -> Verdict:
    """Verdict for f = (x - p)(x - q) and D = {0, ..., |pq|-2, |pq|-1+s}.

    Connected iff s = 0, except for x^2 +- 4x + 4 and x^2 +- 7x + 12 where
    s = 1 is also connected.
    """
    if abs(p) < 2 or abs(q_) < 2:
        raise ValueError("|p| and |q| must both be at least 2")
    if s < 0:
        raise ValueError("s must be non-negative")
    f = gap_polynomial(p, q_)
    limit = 1 if (f.b, f.c) in _SPECIAL_GAP else 0
    status = Status.CONNECTED if s <= limit else Status.DISCONNECTED
    return Verdict(status, Source.GAP_DIGITS, limit)


@dataclass(frozen=True)
class HrpExpansion:
    """Digit stream e_1, e_2, ... with v = sum e_i A^{-i} v.

    ``head`` gives the first coefficients; ``tail`` repeats forever after.
    """

    head: tuple[int, ...]
    tail: tuple[int, ...]

    def coefficient(self, i: int) -> int:
        if i < 1:
            raise IndexError("coefficients are indexed from 1")
        if i <= len(self.head):
            return self.head[i - 1]
        return self.tail[(i - 1 - len(self.head)) % len(self.tail)]

    def digits(self, n: int) -> list[int]:
        return [self.coefficient(i) for i in range(1, n + 1)]

    def __iter__(self) -> Iterator[int]:
        i = 1
        while True:
            yield self.coefficient(i)
            i += 1

    def resigned(self) -> "HrpExpansion":
        """e_i -> (-1)^i e_i: turns an expansion for A into one for -A."""
        tail = self.tail * 2 if len(self.tail) % 2 else self.tail
        off = len(self.head)
        head = tuple((-1) ** i * e for i, e in enumerate(self.head, 1))
        tail = tuple((-1) ** (off + i) * e for i, e in enumerate(tail, 1))
        if len(tail) == 2 and tail[0] == tail[1]:
            tail = tail[:1]
        return HrpExpansion(head, tail)

    def max_abs(self) -> int:
        return max(abs(e) for e in self.head + self.tail)


def _expansion_nonpositive_b(q: Quadratic) -> HrpExpansion | None:
    b, c = q.b, q.c
    if c == 4 and b == -4:
        return HrpExpansion((2, 2), (-2,))
    if c > 0 and b < 0:
        return HrpExpansion((-b - 1,), (-(c + b + 1),))
    if c < 0:
        k = -c + b - 1
        return HrpExpansion((-b + 1,), (k, -k))
    return None


def hrp_expansion(q: Quadratic, m: int) -> HrpExpansion:
    """Explicit expansion of v with coefficients in {-m, ..., m}.

    Only for proven connected cases with a known construction; the b = 0,
    complex-root branch has none and raises ValueError.
    """
    require_expanding(q)
    verdict = classify_consecutive(q, m)
    if not verdict.proven or verdict.status is not Status.CONNECTED:
        raise ValueError(f"{q}, m={m}: not a proven connected case ({verdict})")
    base = q if q.b <= 0 else mirror(q)
    e = _expansion_nonpositive_b(base)
    if e is None:
        raise ValueError(f"{q}: no explicit construction for this branch")
    if q.b > 0:
        e = e.resigned()
    dd = DifferenceSet.consecutive(m)
    if e.max_abs() > m or not verify_expansion(q, dd, e):
        raise AssertionError(f"construction failed to verify for {q}, m={m}")
    return e


def verify_expansion(q: Quadratic, dd, e: HrpExpansion) -> bool:
    """Check that e expands v = (1, 0) with digits from dd.

    Runs the state machine s_k = A s_{k-1} - e_k v from s_0 = v. If every
    state stays in the box and the (state, tail phase) pair recurs, the states
    are bounded forever and so sum e_i A^{-i} v = v exactly.
    """
    if not is_expanding(q):
        return False
    if not isinstance(dd, DifferenceSet):
        dd = DifferenceSet(tuple(dd))
    if not e.tail or any(x not in dd for x in e.head + e.tail):
        return False
    box = state_box(q, dd)
    s = (1, 0)
    if s not in box:
        return False
    for d in e.head:
        s = transition(q, s, d)
        if s not in box:
            return False
    seen = set()
    phase = 0
    while (tuple(s), phase) not in seen:
        seen.add((tuple(s), phase))
        s = transition(q, s, e.tail[phase])
        if s not in box:
            return False
        phase = (phase + 1) % len(e.tail)
    return True
