"""Closed real intervals with outward rounding.

Every operation widens its floating-point result by a few units in the last
place, so the returned interval encloses the exact real result of applying the
operation to any points of the operands.  Basic arithmetic is padded by one
ulp; ``exp``/``log``/``log1p`` results are padded by four ulps, which covers
the accuracy of the platform libm.

The hot loops of the univariate isolator do not go through :class:`IntervalR`
(object creation is too slow there); they call :func:`down` and :func:`up`
directly on floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

_EPS = 2.0**-52
_TINY = 5e-324
TRANSCENDENTAL_ULPS = 4


def down(x: float, ulps: int = 1) -> float:
    """Return a float strictly below ``x`` by at least ``ulps`` ulps."""
    if x - x != 0.0:  # inf / nan pass through
        return x
    return x - (abs(x) * ((ulps + 1) * _EPS) + _TINY)


def up(x: float, ulps: int = 1) -> float:
    """Return a float strictly above ``x`` by at least ``ulps`` ulps."""
    if x - x != 0.0:
        return x
    return x + (abs(x) * ((ulps + 1) * _EPS) + _TINY)


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def exp_down(x: float) -> float:
    if x == -math.inf:
        return 0.0
    return max(0.0, down(_exp(x), TRANSCENDENTAL_ULPS))


def exp_up(x: float) -> float:
    if x == -math.inf:
        return 0.0
    return up(_exp(x), TRANSCENDENTAL_ULPS)


def log_down(x: float) -> float:
    if x <= 0.0:
        return -math.inf
    return down(math.log(x), TRANSCENDENTAL_ULPS)


def log_up(x: float) -> float:
    if x <= 0.0:
        return -math.inf
    return up(math.log(x), TRANSCENDENTAL_ULPS)


def mul_bounds(alo: float, ahi: float, blo: float, bhi: float) -> tuple[float, float]:
    """Outward-rounded product of ``[alo, ahi]`` and ``[blo, bhi]``."""
    if alo >= 0.0 and blo >= 0.0:
        lo, hi = alo * blo, ahi * bhi
    elif ahi <= 0.0 and bhi <= 0.0:
        lo, hi = ahi * bhi, alo * blo
    elif alo >= 0.0 and bhi <= 0.0:
        lo, hi = ahi * blo, alo * bhi
    elif ahi <= 0.0 and blo >= 0.0:
        lo, hi = alo * bhi, ahi * blo
    else:
        ps = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
        ps = [0.0 if p != p else p for p in ps]  # 0 * inf
        lo, hi = min(ps), max(ps)
    if lo != lo:
        lo = 0.0
    if hi != hi:
        hi = 0.0
    return down(lo), up(hi)


def scale_bounds(k: float, lo: float, hi: float) -> tuple[float, float]:
    """Outward-rounded product of the exact scalar ``k`` with ``[lo, hi]``."""
    if k == 0.0:
        return 0.0, 0.0
    if k > 0.0:
        return down(k * lo), up(k * hi)
    return down(k * hi), up(k * lo)


@dataclass(frozen=True, slots=True)
class IntervalR:
    """A closed interval ``[lo, hi]`` of reals."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"empty or invalid interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: float) -> "IntervalR":
        return cls(float(x), float(x))

    @classmethod
    def hull(cls, values: Iterable[float]) -> "IntervalR":
        vals = list(values)
        return cls(min(vals), max(vals))

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    @property
    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0.0 <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0.0 or self.hi < 0.0

    def sign(self) -> int:
        """+1 or -1 when the sign is certain, else 0."""
        if self.lo > 0.0:
            return 1
        if self.hi < 0.0:
            return -1
        return 0

    def subset_of(self, other: "IntervalR") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def interior_of(self, other: "IntervalR") -> bool:
        return other.lo < self.lo and self.hi < other.hi

    def intersect(self, other: "IntervalR") -> "IntervalR | None":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return IntervalR(lo, hi) if lo <= hi else None

    def union_hull(self, other: "IntervalR") -> "IntervalR":
        return IntervalR(min(self.lo, other.lo), max(self.hi, other.hi))

    def inflate(self, rel: float, abs_: float = 0.0) -> "IntervalR":
        r = rel * self.mag + abs_
        return IntervalR(down(self.lo - r), up(self.hi + r))

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "IntervalR":
        if isinstance(x, IntervalR):
            return x
        x = float(x)
        return IntervalR(x, x)

    def __neg__(self) -> "IntervalR":
        return IntervalR(-self.hi, -self.lo)

    @staticmethod
    def _outward(lo: float, hi: float) -> "IntervalR":
        # inf - inf leaves that side unbounded
        return IntervalR(-math.inf if lo != lo else down(lo), math.inf if hi != hi else up(hi))

    def __add__(self, other) -> "IntervalR":
        o = self._coerce(other)
        return self._outward(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other) -> "IntervalR":
        o = self._coerce(other)
        return self._outward(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other) -> "IntervalR":
        return self._coerce(other) - self

    def __mul__(self, other) -> "IntervalR":
        if not isinstance(other, IntervalR):
            return IntervalR(*scale_bounds(float(other), self.lo, self.hi))
        return IntervalR(*mul_bounds(self.lo, self.hi, other.lo, other.hi))

    __rmul__ = __mul__

    def reciprocal(self) -> "IntervalR":
        if self.contains_zero():
            raise ZeroDivisionError("interval reciprocal of an interval containing 0")
        return IntervalR(down(1.0 / self.hi), up(1.0 / self.lo))

    def __truediv__(self, other) -> "IntervalR":
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other) -> "IntervalR":
        return self._coerce(other) * self.reciprocal()

    def exp(self) -> "IntervalR":
        return IntervalR(exp_down(self.lo), exp_up(self.hi))

    def log(self) -> "IntervalR":
        if self.lo <= 0.0:
            raise ValueError("log of an interval touching the non-positive reals")
        return IntervalR(log_down(self.lo), log_up(self.hi))

    def __repr__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


def isum(items: Sequence[IntervalR]) -> IntervalR:
    total = IntervalR(0.0, 0.0)
    for it in items:
        total = total + it
    return total


@dataclass(frozen=True)
class Box:
    """Axis-aligned box, one :class:`IntervalR` per coordinate."""

    sides: tuple[IntervalR, ...]

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(self.sides))
        if not self.sides:
            raise ValueError("a box needs at least one side")

    @classmethod
    def from_bounds(cls, bounds: Iterable[tuple[float, float]]) -> "Box":
        return cls(tuple(IntervalR(float(lo), float(hi)) for lo, hi in bounds))

    @classmethod
    def around(cls, point: Sequence[float], radius: float) -> "Box":
        return cls(tuple(IntervalR(down(x - radius), up(x + radius)) for x in point))

    def __len__(self) -> int:
        return len(self.sides)

    def __getitem__(self, i: int) -> IntervalR:
        return self.sides[i]

    def __iter__(self):
        return iter(self.sides)

    @property
    def mid(self) -> tuple[float, ...]:
        return tuple(s.mid for s in self.sides)

    @property
    def widths(self) -> tuple[float, ...]:
        return tuple(s.width for s in self.sides)

    def in_positive_orthant(self) -> bool:
        return all(s.lo > 0.0 for s in self.sides)

    def contains(self, point: Sequence[float]) -> bool:
        return len(point) == len(self.sides) and all(x in s for x, s in zip(point, self.sides))

    def log(self) -> "Box":
        return Box(tuple(s.log() for s in self.sides))

    def exp(self) -> "Box":
        return Box(tuple(s.exp() for s in self.sides))

    def inflate(self, rel: float, abs_: float = 0.0) -> "Box":
        return Box(tuple(s.inflate(rel, abs_) for s in self.sides))

    def as_bounds(self) -> list[tuple[float, float]]:
        return [(s.lo, s.hi) for s in self.sides]
