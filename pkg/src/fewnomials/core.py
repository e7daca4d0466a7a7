"""Fewnomials with real exponents, certified evaluation and root certificates.

A fewnomial is a finite sum ``sum_k c_k x^{a_k}`` with nonzero real
coefficients and real exponent vectors, considered on the open positive
orthant.  All evaluation happens per term in log space,
``sign(c) * exp(log|c| + a . log x)``, so that exponents such as 108 do not
overflow where the value itself is representable.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator, Mapping, Sequence

import numpy as np

from .interval import (
    Box,
    IntervalR,
    down,
    exp_down,
    exp_up,
    isum,
    log_down,
    log_up,
    scale_bounds,
    up,
)


class DomainError(ValueError):
    """A point or box leaves the open positive orthant."""


class DimensionError(ValueError):
    """Operands disagree on the number of variables or equations."""


def _as_exponent(a: Iterable[float]) -> tuple[float, ...]:
    vec = tuple(float(x) + 0.0 for x in a)  # + 0.0 folds -0.0 into 0.0
    if not all(math.isfinite(x) for x in vec):
        raise ValueError(f"exponent vector must be finite, got {vec}")
    return vec


@dataclass(frozen=True)
class Term:
    coeff: float
    exponent: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeff", float(self.coeff))
        object.__setattr__(self, "exponent", _as_exponent(self.exponent))
        if self.coeff == 0.0 or not math.isfinite(self.coeff):
            raise ValueError(f"term coefficient must be finite and nonzero, got {self.coeff}")


@dataclass(frozen=True)
class Fewnomial:
    """An ``n``-variate real-exponent polynomial ``sum c x^a``.

    Terms with identical exponent vectors (exact float comparison) are merged
    on construction and terms whose merged coefficient is zero are dropped.
    The stored term order is lexicographic in the exponent vector, so two
    fewnomials built from permutations of the same term list compare equal.
    """

    n: int
    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"number of variables must be a positive integer, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        merged: dict[tuple[float, ...], list[float]] = {}
        for t in self.terms:
            if not isinstance(t, Term):
                t = Term(*t)
            if len(t.exponent) != self.n:
                raise DimensionError(
                    f"exponent {t.exponent} has length {len(t.exponent)}, expected {self.n}"
                )
            merged.setdefault(t.exponent, []).append(t.coeff)
        out = []
        for a in sorted(merged):
            c = math.fsum(merged[a])
            if c != 0.0:
                out.append(Term(c, a))
        object.__setattr__(self, "terms", tuple(out))

    # constructors -------------------------------------------------------
    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[float, Sequence[float]]]) -> "Fewnomial":
        return cls(n, tuple(Term(c, tuple(a)) for c, a in pairs))

    @classmethod
    def constant(cls, n: int, c: float) -> "Fewnomial":
        return cls(n, (Term(c, (0.0,) * n),)) if c else cls(n)

    @classmethod
    def monomial(cls, coeff: float, exponent: Sequence[float]) -> "Fewnomial":
        return cls(len(exponent), (Term(coeff, tuple(exponent)),))

    # container protocol -------------------------------------------------
    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    @property
    def m(self) -> int:
        return len(self.terms)

    @property
    def coeffs(self) -> tuple[float, ...]:
        return tuple(t.coeff for t in self.terms)

    @property
    def support(self) -> tuple[tuple[float, ...], ...]:
        return tuple(t.exponent for t in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: Sequence[float]) -> float:
        key = _as_exponent(exponent)
        for t in self.terms:
            if t.exponent == key:
                return t.coeff
        return 0.0

    # algebra ------------------------------------------------------------
    def _check(self, other: "Fewnomial"):
        if other.n != self.n:
            raise DimensionError(f"cannot combine {self.n}- and {other.n}-variate fewnomials")

    def __add__(self, other):
        if not isinstance(other, Fewnomial):
            other = Fewnomial.constant(self.n, float(other))
        self._check(other)
        return Fewnomial(self.n, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return Fewnomial(self.n, tuple(Term(-t.coeff, t.exponent) for t in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Fewnomial):
            k = float(other)
            if k == 0.0:
                return Fewnomial(self.n)
            return Fewnomial(self.n, tuple(Term(k * t.coeff, t.exponent) for t in self.terms))
        self._check(other)
        prods = (
            Term(s.coeff * t.coeff, tuple(x + y for x, y in zip(s.exponent, t.exponent)))
            for s, t in itertools.product(self.terms, other.terms)
        )
        return Fewnomial(self.n, tuple(prods))

    __rmul__ = __mul__

    def shift(self, exponent: Sequence[float], coeff: float = 1.0) -> "Fewnomial":
        """Multiply by the monomial ``coeff * x^exponent``."""
        e = _as_exponent(exponent)
        return Fewnomial(
            self.n,
            tuple(
                Term(coeff * t.coeff, tuple(x + y for x, y in zip(t.exponent, e)))
                for t in self.terms
            ),
        )

    def __call__(self, x: Sequence[float]) -> float:
        return evaluate(self, x)

    def __repr__(self) -> str:
        if not self.terms:
            return f"Fewnomial(n={self.n}, 0)"
        parts = []
        for t in self.terms:
            mono = "*".join(
                f"x{i + 1}^{e:g}" for i, e in enumerate(t.exponent) if e != 0.0
            )
            parts.append(f"{t.coeff:+g}" + (f"*{mono}" if mono else ""))
        return f"Fewnomial(n={self.n}, {' '.join(parts)})"


@dataclass(frozen=True)
class FewnomialSystem:
    """A ``k x n`` system ``(f_1, ..., f_k)`` of ``n``-variate fewnomials."""

    n: int
    polys: tuple[Fewnomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        for f in self.polys:
            if f.n != self.n:
                raise DimensionError(f"member has {f.n} variables, system has {self.n}")

    @classmethod
    def of(cls, *polys: Fewnomial) -> "FewnomialSystem":
        if not polys:
            raise ValueError("empty system")
        return cls(polys[0].n, polys)

    @property
    def k(self) -> int:
        return len(self.polys)

    @property
    def type(self) -> tuple[int, ...]:
        return tuple(f.m for f in self.polys)

    def is_square(self) -> bool:
        return self.k == self.n

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self) -> Iterator[Fewnomial]:
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __call__(self, x: Sequence[float]) -> list[float]:
        return [evaluate(f, x) for f in self.polys]


# -- evaluation ---------------------------------------------------------------


def _logs(x: Sequence[float]) -> list[float]:
    out = []
    for v in x:
        v = float(v)
        if not v > 0.0:
            raise DomainError(f"coordinate {v} is not in the open positive orthant")
        out.append(math.log(v))
    return out


def evaluate(f: Fewnomial, x: Sequence[float], *, full_output: bool = False):
    """Evaluate ``f`` at a point of the positive orthant.

    Each term is computed as ``sign(c) * exp(log|c| + a . log x)``.  Terms
    that overflow are reported as signed infinities.  With
    ``full_output=True`` the return value is ``(value, overflowed)``.
    """
    if len(x) != f.n:
        raise DimensionError(f"point has {len(x)} coordinates, expected {f.n}")
    lx = _logs(x)
    finite, inf_sign, overflow = [], 0.0, False
    for t in f.terms:
        e = math.log(abs(t.coeff)) + math.fsum(a * l for a, l in zip(t.exponent, lx))
        if e > 709.78:
            overflow = True
            inf_sign += math.copysign(1.0, t.coeff)
        else:
            finite.append(math.copysign(math.exp(e), t.coeff))
    if overflow:
        value = math.copysign(math.inf, inf_sign) if inf_sign else math.nan
    else:
        value = math.fsum(finite)
    return (value, overflow) if full_output else value


def evaluate_exact(f: Fewnomial, x: Sequence) -> Fraction:
    """Exact rational evaluation for integer exponents and rational points.

    Coefficients are taken as the exact binary rationals they are stored as.
    """
    if len(x) != f.n:
        raise DimensionError(f"point has {len(x)} coordinates, expected {f.n}")
    xs = [Fraction(v) for v in x]
    total = Fraction(0)
    for t in f.terms:
        if any(a != int(a) for a in t.exponent):
            raise ValueError("exact evaluation needs integer exponents")
        term = Fraction(t.coeff)
        for v, a in zip(xs, t.exponent):
            a = int(a)
            if a < 0 and v == 0:
                raise DomainError("negative power of zero")
            term *= v**a
        total += term
    return total


def _term_log_bounds(t: Term, zbox: Sequence[IntervalR]) -> tuple[float, float]:
    """Bounds of ``log|c| + a . z`` for ``z`` in ``zbox``."""
    lo, hi = log_down(abs(t.coeff)), log_up(abs(t.coeff))
    for a, z in zip(t.exponent, zbox):
        if a == 0.0:
            continue
        plo, phi = scale_bounds(a, z.lo, z.hi)
        lo, hi = down(lo + plo), up(hi + phi)
    return lo, hi


def evaluate_log_interval(f: Fewnomial, zbox: Sequence[IntervalR]) -> IntervalR:
    """Enclosure of ``f(exp(z))`` over a box of log coordinates ``z``."""
    lo_parts, hi_parts = [], []
    for t in f.terms:
        elo, ehi = _term_log_bounds(t, zbox)
        vlo, vhi = exp_down(elo), exp_up(ehi)
        if t.coeff > 0:
            lo_parts.append(vlo)
            hi_parts.append(vhi)
        else:
            lo_parts.append(-vhi)
            hi_parts.append(-vlo)
    return isum([IntervalR(lo, hi) for lo, hi in zip(lo_parts, hi_parts)])


def evaluate_interval(f: Fewnomial, b: Box) -> IntervalR:
    """Enclosure of ``{f(x) : x in b}`` for a box inside the open orthant."""
    if len(b) != f.n:
        raise DimensionError(f"box has {len(b)} sides, expected {f.n}")
    if not b.in_positive_orthant():
        raise DomainError("box touches a coordinate hyperplane")
    return evaluate_log_interval(f, b.log().sides)


def partial(f: Fewnomial, i: int) -> Fewnomial:
    """Logarithmic partial derivative ``x_i * df/dx_i`` (``i`` is 1-based).

    Exponent vectors are unchanged; each coefficient is multiplied by the
    ``i``-th exponent, so terms not involving ``x_i`` drop out.
    """
    if not 1 <= i <= f.n:
        raise IndexError(f"variable index {i} outside 1..{f.n}")
    return Fewnomial(
        f.n,
        tuple(Term(t.coeff * t.exponent[i - 1], t.exponent) for t in f.terms if t.exponent[i - 1] != 0.0),
    )


def derivative(f: Fewnomial, i: int) -> Fewnomial:
    """True partial derivative ``df/dx_i``; the ``i``-th exponent drops by one."""
    if not 1 <= i <= f.n:
        raise IndexError(f"variable index {i} outside 1..{f.n}")
    out = []
    for t in f.terms:
        a = t.exponent[i - 1]
        if a != 0.0:
            e = list(t.exponent)
            e[i - 1] = a - 1.0
            out.append(Term(t.coeff * a, tuple(e)))
    return Fewnomial(f.n, tuple(out))


# -- certificates -------------------------------------------------------------


class Status(enum.Enum):
    UNIQUE_NONDEGENERATE = "unique_nondegenerate"
    SIGN_CHANGE_ONLY = "sign_change_only"
    POSSIBLY_DEGENERATE = "possibly_degenerate"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class RootCertificate:
    """A box together with what is known about the roots inside it.

    ``UNIQUE_NONDEGENERATE`` means the box holds exactly one root and the
    Jacobian (or derivative) is nonsingular on the whole box; ``trace``
    records the tests that established this.
    """

    box: Box
    status: Status
    witness: Mapping[str, Any] | None = None
    trace: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "trace", tuple(self.trace))
        if self.status is Status.UNIQUE_NONDEGENERATE and not self.trace:
            raise ValueError("a unique-root certificate needs a certification trace")

    @property
    def is_unique(self) -> bool:
        return self.status is Status.UNIQUE_NONDEGENERATE

    @property
    def mid(self) -> tuple[float, ...]:
        return self.box.mid


# -- Jacobians ----------------------------------------------------------------


def log_jacobian(F: FewnomialSystem) -> list[list[Fewnomial]]:
    """Matrix of logarithmic partials ``x_j d f_i / d x_j``."""
    return [[partial(f, j) for j in range(1, F.n + 1)] for f in F.polys]


def interval_det(M: Sequence[Sequence[IntervalR]]) -> IntervalR:
    """Determinant of a small interval matrix by cofactor expansion."""
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = IntervalR(0.0, 0.0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * interval_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def interval_jacobian_nonsingular(F: FewnomialSystem, b: Box) -> bool:
    """True if the Jacobian determinant of ``F`` provably has no zero on ``b``.

    ``det(df_i/dx_j) = det(x_j df_i/dx_j) / prod x_j`` and ``prod x_j > 0``
    on the orthant, so the test runs on the logarithmic Jacobian.  ``False``
    only means the test was inconclusive.
    """
    if F.k != F.n:
        raise DimensionError(f"Jacobian test needs a square system, got {F.k}x{F.n}")
    if not b.in_positive_orthant():
        raise DomainError("box touches a coordinate hyperplane")
    z = b.log().sides
    J = [[evaluate_log_interval(g, z) for g in row] for row in log_jacobian(F)]
    return interval_det(J).excludes_zero()


def krawczyk_certify(F: FewnomialSystem, b: Box) -> bool:
    """Krawczyk existence-and-uniqueness test in log coordinates.

    Works with ``G(z) = F(exp z)``.  Success means ``b`` contains exactly one
    root of ``F`` and every matrix in the interval Jacobian over ``b`` is
    nonsingular, so that root is non-degenerate.
    """
    n = F.n
    if F.k != n:
        raise DimensionError(f"Krawczyk test needs a square system, got {F.k}x{n}")
    if not b.in_positive_orthant():
        return False
    Z = b.log().sides
    m = [s.mid for s in Z]
    mbox = [IntervalR(v, v) for v in m]
    Gm = [evaluate_log_interval(f, mbox) for f in F.polys]
    Jf = log_jacobian(F)
    JZ = [[evaluate_log_interval(g, Z) for g in row] for row in Jf]
    Jm = np.array([[evaluate_log_interval(g, mbox).mid for g in row] for row in Jf])
    try:
        Y = np.linalg.inv(Jm)
    except np.linalg.LinAlgError:
        return False
    if not np.all(np.isfinite(Y)):
        return False
    for i in range(n):
        acc = IntervalR(m[i], m[i])
        for j in range(n):
            acc = acc - float(Y[i, j]) * Gm[j]
        for j in range(n):
            # (I - Y J)_{ij}
            yj = IntervalR(1.0 if i == j else 0.0, 1.0 if i == j else 0.0)
            for k in range(n):
                yj = yj - float(Y[i, k]) * JZ[k][j]
            acc = acc + yj * (Z[j] - m[j])
        if not acc.interior_of(Z[i]):
            return False
    return True
