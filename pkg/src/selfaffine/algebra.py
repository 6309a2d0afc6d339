"""Integer core: quadratic characteristic polynomials, the lattice {v, Av}
and exact eigenvalue-modulus tests.

Everything here is integer arithmetic. A point (gamma, delta) stands for
gamma*v + delta*A v, where A is any integer matrix with characteristic
polynomial x^2 + b x + c and {v, Av} is a basis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence


class NotExpandingError(ValueError):
    """Raised when an operation needs an expanding polynomial and got another."""


class ResourceLimitError(RuntimeError):
    """Raised when a requested computation exceeds a configured size cap."""


@dataclass(frozen=True)
class Quadratic:
    """The polynomial x^2 + b x + c."""

    b: int
    c: int

    def __post_init__(self):
        if not (isinstance(self.b, int) and isinstance(self.c, int)):
            raise TypeError("coefficients must be integers")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.c

    def __call__(self, x):
        return x * x + self.b * x + self.c

    def __str__(self):
        return f"x^2{self.b:+d}x{self.c:+d}"


class LatticePoint(NamedTuple):
    gamma: int
    delta: int

    def __add__(self, other):
        return LatticePoint(self.gamma + other[0], self.delta + other[1])

    def __sub__(self, other):
        return LatticePoint(self.gamma - other[0], self.delta - other[1])

    def __neg__(self):
        return LatticePoint(-self.gamma, -self.delta)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return LatticePoint(k * self.gamma, k * self.delta)

    __rmul__ = __mul__


ZERO = LatticePoint(0, 0)


class RootKind(enum.Enum):
    REAL_DISTINCT = "real-distinct"
    REAL_DOUBLE = "real-double"
    COMPLEX = "complex"


@dataclass(frozen=True)
class SpectralData:
    """Root structure of x^2 + b x + c.

    For complex roots, ``period`` is k when the argument of the root of
    c x^2 - |b| x + 1 equals pi/k for k in {6, 4, 3, 2} (b^2 = 3c, 2c, c, 0),
    and None for any other angle.
    """

    discriminant: int
    root_kind: RootKind
    modulus_squared: int | None = None
    period: int | None = None

    @property
    def theta_over_pi(self) -> Fraction | None:
        return None if self.period is None else Fraction(1, self.period)


_ANGLE_PERIODS = ((3, 6), (2, 4), (1, 3))


def spectral_data(q: Quadratic) -> SpectralData:
    d = q.discriminant
    if d > 0:
        return SpectralData(d, RootKind.REAL_DISTINCT)
    if d == 0:
        return SpectralData(d, RootKind.REAL_DOUBLE)
    b2 = q.b * q.b
    period = None
    if q.b == 0:
        period = 2
    else:
        for ratio, k in _ANGLE_PERIODS:
            if b2 == ratio * q.c:
                period = k
                break
    return SpectralData(d, RootKind.COMPLEX, modulus_squared=q.c, period=period)


def is_expanding(q: Quadratic) -> bool:
    """Both roots strictly outside the unit circle.

    Jury conditions on the reciprocal polynomial c x^2 + b x + 1:
    |c| >= 2 and |b| < |c + 1|.
    """
    return abs(q.c) >= 2 and abs(q.b) < abs(q.c + 1)


def require_expanding(q: Quadratic) -> None:
    if not is_expanding(q):
        raise NotExpandingError(f"{q} is not expanding (b={q.b}, c={q.c})")


def min_eigen_modulus_at_least_two(q: Quadratic) -> bool:
    """Both roots have modulus >= 2, decided by integer sign tests."""
    if q.discriminant < 0:
        return q.c >= 4
    f_pos, f_neg = q(2), q(-2)
    if f_pos <= 0 and f_neg <= 0:
        # -2 and 2 both lie between the roots
        return True
    if f_pos < 0 or f_neg < 0:
        # exactly one of +-2 is enclosed, so one root sits in (-2, 2)
        return False
    # neither endpoint enclosed: the roots are on one side of +-2 iff the
    # vertex -b/2 is not strictly inside (-2, 2)
    return abs(q.b) >= 4


def apply_A(q: Quadratic, point: Sequence[int]) -> LatticePoint:
    """A (gamma v + delta Av) = -c delta v + (gamma - b delta) Av."""
    gamma, delta = point
    return LatticePoint(-q.c * delta, gamma - q.b * delta)


def mirror(q: Quadratic) -> Quadratic:
    """Polynomial of -A. Connectedness is invariant under this map."""
    return Quadratic(-q.b, q.c)


def companion_matrix(q: Quadratic):
    """Companion matrix [[0, -c], [1, -b]] acting on v = e1."""
    import numpy as np

    return np.array([[0, -q.c], [1, -q.b]], dtype=np.int64)


class DigitKind(enum.Enum):
    CONSECUTIVE = "consecutive"
    GAP = "gap"
    GENERAL = "general"


@dataclass(frozen=True)
class CollinearDigitSet:
    """Integer digits D (sorted, distinct, starting at 0) standing for D*v."""

    digits: tuple[int, ...]
    kind: DigitKind = DigitKind.GENERAL
    params: tuple[int, ...] = ()

    def __post_init__(self):
        ds = tuple(self.digits)
        if not ds:
            raise ValueError("digit set must be non-empty")
        if ds[0] != 0:
            raise ValueError("digit set must start at 0")
        if any(b <= a for a, b in zip(ds, ds[1:])):
            raise ValueError("digits must be strictly increasing")
        object.__setattr__(self, "digits", ds)

    @classmethod
    def consecutive(cls, m: int) -> "CollinearDigitSet":
        if m < 0:
            raise ValueError("m must be non-negative")
        return cls(tuple(range(m + 1)), DigitKind.CONSECUTIVE, (m,))

    @classmethod
    def gap(cls, p: int, q: int, s: int) -> "CollinearDigitSet":
        """{0, 1, ..., |pq|-2, |pq|-1+s}."""
        if abs(p) < 2 or abs(q) < 2:
            raise ValueError("|p| and |q| must both be at least 2")
        if s < 0:
            raise ValueError("s must be non-negative")
        n = abs(p * q)
        return cls(tuple(range(n - 1)) + (n - 1 + s,), DigitKind.GAP, (p, q, s))

    @classmethod
    def from_digits(cls, digits) -> "CollinearDigitSet":
        """Normalize an arbitrary integer list: dedupe, sort, shift to start at 0."""
        ds = sorted(set(int(d) for d in digits))
        if not ds:
            raise ValueError("digit set must be non-empty")
        ds = tuple(d - ds[0] for d in ds)
        if ds == tuple(range(len(ds))):
            return cls(ds, DigitKind.CONSECUTIVE, (len(ds) - 1,))
        return cls(ds)

    def differences(self) -> tuple[int, ...]:
        return tuple(sorted({a - b for a in self.digits for b in self.digits}))

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)
