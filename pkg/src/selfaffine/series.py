"""Coordinates of A^{-i} v in the basis {v, Av} and their absolute sums.

A^{-i} v = alpha_i v + beta_i Av. Both sequences obey
c x_{i+2} + b x_{i+1} + x_i = 0, and

    alpha_1 = -b/c,  alpha_2 = (b^2 - c)/c^2,
    beta_1  = -1/c,  beta_2  = b/c^2.

alpha_tilde = sum |alpha_i| and beta_tilde = sum |beta_i| bound the
coordinates of any lattice point of T - T (scaled by max |digit difference|).
"""

from __future__ import annotations

import cmath
import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .algebra import Quadratic, RootKind, require_expanding, spectral_data


class Exactness(enum.Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper-bound"


@dataclass(frozen=True)
class SeriesBounds:
    alpha_tilde: Fraction
    beta_tilde: Fraction
    exactness: Exactness
    terms: int | None = None  # truncation index when exactness is UPPER_BOUND

    @property
    def exact(self) -> bool:
        return self.exactness is Exactness.EXACT


class AlphaBetaSequence:
    """Lazily extended table of (alpha_i, beta_i), i >= 1, as Fractions.

    Extension is guarded by a lock so a shared instance can be used from
    several threads.
    """

    def __init__(self, q: Quadratic):
        require_expanding(q)
        self.q = q
        b, c = q.b, q.c
        self._alpha = [Fraction(-b, c), Fraction(b * b - c, c * c)]
        self._beta = [Fraction(-1, c), Fraction(b, c * c)]
        self._lock = threading.Lock()

    def _extend(self, n: int) -> None:
        with self._lock:
            b, c = self.q.b, self.q.c
            al, be = self._alpha, self._beta
            while len(al) < n:
                al.append(-(b * al[-1] + al[-2]) / c)
                be.append(-(b * be[-1] + be[-2]) / c)

    def __getitem__(self, i: int) -> tuple[Fraction, Fraction]:
        if i < 1:
            raise IndexError("sequence is indexed from 1")
        if i > len(self._alpha):
            self._extend(i)
        return self._alpha[i - 1], self._beta[i - 1]

    def alphas(self, n: int) -> list[Fraction]:
        self._extend(n)
        return self._alpha[:n]

    def betas(self, n: int) -> list[Fraction]:
        self._extend(n)
        return self._beta[:n]


_tables: dict[Quadratic, AlphaBetaSequence] = {}
_tables_lock = threading.Lock()


def sequence(q: Quadratic) -> AlphaBetaSequence:
    with _tables_lock:
        seq = _tables.get(q)
        if seq is None:
            seq = _tables[q] = AlphaBetaSequence(q)
    return seq


def alpha_beta(q: Quadratic, i: int) -> tuple[Fraction, Fraction]:
    """Exact (alpha_i, beta_i) from the recurrence."""
    return sequence(q)[i]


def alpha_beta_closed(q: Quadratic, i: int) -> tuple[float, float]:
    """Closed form via the roots r1, r2 of c x^2 + b x + 1 (floating point).

    alpha_i = c (r1^{i+1} - r2^{i+1}) / sqrt(D),  beta_i = -(r1^i - r2^i) / sqrt(D).
    Not defined for a double root.
    """
    require_expanding(q)
    if i < 1:
        raise ValueError("i must be >= 1")
    disc = q.discriminant
    if disc == 0:
        raise ValueError("closed form needs distinct roots; use alpha_beta")
    sq = cmath.sqrt(disc)
    r1 = (-q.b + sq) / (2 * q.c)
    r2 = (-q.b - sq) / (2 * q.c)
    alpha = q.c * (r1 ** (i + 1) - r2 ** (i + 1)) / sq
    beta = -(r1**i - r2**i) / sq
    return alpha.real, beta.real


def alpha_tilde_formula(q: Quadratic) -> Fraction | None:
    """Closed-form alpha_tilde where one is known, else None."""
    require_expanding(q)
    b, c = abs(q.b), q.c
    sd = spectral_data(q)
    if sd.root_kind is not RootKind.COMPLEX:
        if c > 0:
            return Fraction(b - 1, c - b + 1)
        return Fraction(b + 1, -c - b - 1)
    if sd.period == 6:
        return Fraction(3 * b**5 + 6 * b**4 + 9 * b**3 + 9 * b**2 + 27, b**6 - 27)
    if sd.period == 4:
        return Fraction(2 * b**3 + 2 * b**2 + 4, b**4 - 4)
    if sd.period == 3:
        return Fraction(b**2 + 1, b**3 - 1)
    if sd.period == 2:
        return Fraction(1, c - 1)
    return None


def beta_tilde_formula(q: Quadratic) -> Fraction | None:
    """Closed-form beta_tilde for real roots, else None."""
    require_expanding(q)
    b, c = abs(q.b), q.c
    if q.discriminant < 0:
        return None
    if c > 0:
        return Fraction(1, c - b + 1)
    return Fraction(1, -c - b - 1)


def _block_sum(xs: list[Fraction], period: int) -> Fraction:
    # x_{i+P} = rho x_i for all i, so sum |x_i| = (sum_{i<=P} |x_i|) / (1 - |rho|)
    x1, x2 = xs[0], xs[1]
    y1, y2 = xs[period], xs[period + 1]
    rho = y1 / x1 if x1 else y2 / x2
    if y1 != rho * x1 or y2 != rho * x2:
        raise ArithmeticError("recurrence power is not scalar for this period")
    return sum(abs(x) for x in xs[:period]) / (1 - abs(rho))


def block_tilde_sums(q: Quadratic) -> tuple[Fraction, Fraction]:
    """Exact sums for complex roots at angle pi/k, by summing one period.

    After k steps the recurrence matrix becomes the scalar -c^{-k/2}, so the
    absolute values repeat geometrically.
    """
    require_expanding(q)
    period = spectral_data(q).period
    if period is None:
        raise ValueError(f"{q}: no periodic block structure")
    seq = sequence(q)
    n = period + 2
    return _block_sum(seq.alphas(n), period), _block_sum(seq.betas(n), period)


def _sqrt_lower(n: int, scale: int = 10**9) -> Fraction:
    return Fraction(isqrt(n * scale * scale), scale)


def _generic_upper_bound(q: Quadratic, rel_tol: Fraction) -> SeriesBounds:
    # |alpha_i| <= 2c r^{i+1}/sqrt|D|, |beta_i| <= 2 r^i/sqrt|D|, r = c^{-1/2}
    c = q.c
    r_hi = 1 / _sqrt_lower(c)
    s_lo = _sqrt_lower(-q.discriminant)
    if r_hi >= 1 or s_lo <= 0:
        raise ArithmeticError("rational bracketing failed")
    seq = sequence(q)
    sa = sb = Fraction(0)
    n = 0
    rpow = r_hi  # r_hi^(n+1)
    while True:
        n += 1
        a, b = seq[n]
        sa += abs(a)
        sb += abs(b)
        rpow *= r_hi
        tail_a = 2 * c * rpow * r_hi / ((1 - r_hi) * s_lo)
        tail_b = 2 * rpow / ((1 - r_hi) * s_lo)
        if n >= 8 and tail_a < rel_tol * sa and tail_b < rel_tol * sb:
            break
    return SeriesBounds(_round_up(sa + tail_a), _round_up(sb + tail_b),
                        Exactness.UPPER_BOUND, terms=n)


def _round_up(x: Fraction, denom: int = 10**15) -> Fraction:
    # outward rounding keeps the bound valid and the denominator small
    return Fraction(-((-x.numerator * denom) // x.denominator), denom)


def tilde_sums(q: Quadratic, rel_tol: Fraction = Fraction(1, 10**12)) -> SeriesBounds:
    """alpha_tilde and beta_tilde, exact where a closed form exists.

    Real roots and complex roots at angle pi/6, pi/4, pi/3, pi/2 give exact
    values. Any other complex case returns a rigorous rational upper bound
    (truncated exact sum plus geometric tail).
    """
    require_expanding(q)
    sd = spectral_data(q)
    if sd.root_kind is not RootKind.COMPLEX:
        return SeriesBounds(alpha_tilde_formula(q), beta_tilde_formula(q), Exactness.EXACT)
    if sd.period is not None:
        _, beta = block_tilde_sums(q)
        return SeriesBounds(alpha_tilde_formula(q), beta, Exactness.EXACT)
    return _generic_upper_bound(q, rel_tol)


def partial_abs_sums(q: Quadratic, n: int) -> tuple[Fraction, Fraction]:
    seq = sequence(q)
    return (sum(abs(a) for a in seq.alphas(n)), sum(abs(b) for b in seq.betas(n)))


def tail_bound(q: Quadratic, n: int) -> tuple[float, float]:
    """Upper bounds on sum_{i>n} |alpha_i| and sum_{i>n} |beta_i|.

    With rho the largest root modulus of c x^2 + b x + 1 (so rho < 1):
    distinct roots give |alpha_i| <= 2|c| rho^{i+1}/sqrt|D| and
    |beta_i| <= 2 rho^i/sqrt|D|; a double root r gives alpha_i = (i+1) r^i and
    beta_i = -i r^{i-1}/c. The geometric (or arithmetico-geometric) tails of
    those bounds are returned.
    """
    require_expanding(q)
    disc = q.discriminant
    sq = cmath.sqrt(disc)
    rho = max(abs((-q.b + sq) / (2 * q.c)), abs((-q.b - sq) / (2 * q.c)))
    if disc != 0:
        s = abs(sq)
        return (2 * abs(q.c) * rho ** (n + 2) / (s * (1 - rho)),
                2 * rho ** (n + 1) / (s * (1 - rho)))

    def weighted(k0):
        # sum_{i>n} (i + k0) rho^i
        return rho ** (n + 1) * ((n + 1 + k0) - (n + k0) * rho) / (1 - rho) ** 2

    return weighted(1), weighted(0) / (abs(q.c) * rho)
