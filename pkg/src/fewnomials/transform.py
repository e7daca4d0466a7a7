"""Monomial changes of variables and the canonical form of trinomial pairs.

Convention: a :class:`MonomialMap` with matrix ``A`` and scaling ``s`` is the
substitution ``x_i = s_i * prod_j y_j ** A[i, j]``.  Under it a monomial
``c x^a`` becomes ``c s^a y^(a A)``, i.e. exponent row vectors are multiplied
on the right by ``A``.  Points map as ``log x = log s + A log y``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import DimensionError, Fewnomial, FewnomialSystem, Term
from .interval import Box, IntervalR, down, exp_down, exp_up, up
from .polytope import DEFAULT_TAU_RANK, span_dimension


class SingularMapError(ValueError):
    pass


class CanonicalizationError(ValueError):
    kind = "CANONICALIZATION"


class DegenerateNewtonError(CanonicalizationError):
    """The first polynomial's Newton polygon is a segment or a point."""

    kind = "DEGENERATE_NEWTON"


class IllConditionedMapError(CanonicalizationError):
    """Mapped coefficients leave the double range."""

    kind = "ILL_CONDITIONED"


class SignObstructionError(CanonicalizationError):
    """All coefficients of the first polynomial share a sign; no positive roots."""

    kind = "SIGN_OBSTRUCTION"


def exact_inverse(M: Sequence[Sequence[float]]) -> list[list[float]]:
    """Inverse of a float matrix, computed in exact rationals then rounded.

    Every entry is the correctly rounded value of the true inverse of the
    stored floats, so integer matrices with rational inverses come out as
    clean as doubles allow.
    """
    n = len(M)
    a = [[Fraction(float(v)) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[piv][col] == 0:
            raise SingularMapError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [[float(v) for v in row[n:]] for row in a]


def _row_times(a: Sequence[float], A: Sequence[Sequence[float]]) -> tuple[float, ...]:
    # exact dot products, rounded once
    n = len(A[0])
    return tuple(
        float(sum((Fraction(a[i]) * Fraction(A[i][j]) for i in range(len(a))), Fraction(0))) + 0.0
        for j in range(n)
    )


@dataclass(frozen=True)
class MonomialMap:
    """The substitution ``x_i = s_i * y^(A[i, :])`` (scaling stored as ``log s``)."""

    matrix: tuple[tuple[float, ...], ...]
    log_scale: tuple[float, ...]

    def __post_init__(self):
        A = tuple(tuple(float(v) for v in row) for row in self.matrix)
        n = len(A)
        if n == 0 or any(len(r) != n for r in A):
            raise DimensionError("monomial map needs a square matrix")
        ls = tuple(float(v) for v in self.log_scale)
        if len(ls) != n:
            raise DimensionError("scaling has the wrong length")
        object.__setattr__(self, "matrix", A)
        object.__setattr__(self, "log_scale", ls)

    @classmethod
    def identity(cls, n: int) -> "MonomialMap":
        return cls(tuple(tuple(float(i == j) for j in range(n)) for i in range(n)), (0.0,) * n)

    @classmethod
    def from_scaling(cls, matrix, scaling: Sequence[float]) -> "MonomialMap":
        if any(s <= 0 for s in scaling):
            raise ValueError("scaling must be positive")
        return cls(matrix, tuple(math.log(s) for s in scaling))

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def scaling(self) -> tuple[float, ...]:
        return tuple(math.exp(v) for v in self.log_scale)

    def check_nonsingular(self, tau_rank: float = DEFAULT_TAU_RANK) -> None:
        A = np.array(self.matrix)
        norm = np.linalg.norm(A, 2)
        if not abs(np.linalg.det(A)) > tau_rank * norm**self.n:
            raise SingularMapError(f"exponent matrix is numerically singular: {self.matrix}")

    def inverse(self) -> "MonomialMap":
        Ainv = exact_inverse(self.matrix)
        ls = tuple(-math.fsum(Ainv[i][j] * self.log_scale[j] for j in range(self.n)) for i in range(self.n))
        return MonomialMap(tuple(map(tuple, Ainv)), ls)

    def compose(self, other: "MonomialMap") -> "MonomialMap":
        """``self`` after ``other``: x = self(y), y = other(z)."""
        if other.n != self.n:
            raise DimensionError("cannot compose maps of different sizes")
        A1, A2 = self.matrix, other.matrix
        A = tuple(_row_times(A1[i], A2) for i in range(self.n))
        ls = tuple(
            self.log_scale[i] + math.fsum(A1[i][j] * other.log_scale[j] for j in range(self.n))
            for i in range(self.n)
        )
        return MonomialMap(A, ls)

    def map_log_point(self, logy: Sequence[float]) -> tuple[float, ...]:
        return tuple(
            self.log_scale[i] + math.fsum(self.matrix[i][j] * logy[j] for j in range(self.n))
            for i in range(self.n)
        )

    def map_point(self, y: Sequence[float]) -> tuple[float, ...]:
        """Image ``x`` of a point ``y`` of the positive orthant."""
        return tuple(math.exp(v) for v in self.map_log_point([math.log(v) for v in y]))

    def map_log_box(self, Z: Sequence[IntervalR]) -> list[IntervalR]:
        """Enclosure of ``log x`` over a box of ``log y`` values."""
        out = []
        for i in range(self.n):
            lo = hi = self.log_scale[i]
            for j in range(self.n):
                a = self.matrix[i][j]
                if a == 0.0:
                    continue
                plo, phi = (a * Z[j].lo, a * Z[j].hi) if a > 0 else (a * Z[j].hi, a * Z[j].lo)
                lo, hi = down(lo + down(plo)), up(hi + up(phi))
            out.append(IntervalR(lo, hi))
        return out

    def map_box(self, b: Box) -> Box:
        """Enclosure of the image of a positive box."""
        Z = b.log().sides
        return Box(tuple(IntervalR(exp_down(z.lo), exp_up(z.hi)) for z in self.map_log_box(Z)))


def apply_monomial_map(f: Fewnomial, M: MonomialMap, tau_rank: float = DEFAULT_TAU_RANK) -> Fewnomial:
    """Rewrite ``f(x)`` in the variables ``y`` where ``x = M(y)``."""
    if f.n != M.n:
        raise DimensionError(f"map acts on {M.n} variables, fewnomial has {f.n}")
    M.check_nonsingular(tau_rank)
    return _from_log_terms(f.n, _mapped_log_terms(f, M))


def _mapped_log_terms(f: Fewnomial, M: MonomialMap) -> list[tuple[float, float, tuple[float, ...]]]:
    """``(sign, log|coeff|, exponent)`` of each term of ``f`` after the map."""
    out = []
    for t in f.terms:
        e = _row_times(t.exponent, M.matrix)
        logmag = math.log(abs(t.coeff)) + math.fsum(a * s for a, s in zip(t.exponent, M.log_scale))
        out.append((math.copysign(1.0, t.coeff), logmag, e))
    return out


def _from_log_terms(n: int, items) -> Fewnomial:
    terms = []
    for sgn, logmag, e in items:
        if not -708.0 < logmag < 709.0:
            raise IllConditionedMapError(f"mapped coefficient exp({logmag:.4g}) is outside the float range")
        terms.append(Term(sgn * math.exp(logmag), e))
    return Fewnomial(n, tuple(terms))


def apply_to_system(F: FewnomialSystem, M: MonomialMap) -> FewnomialSystem:
    return FewnomialSystem(F.n, tuple(apply_monomial_map(f, M) for f in F))


def divide_by_term(f: Fewnomial, t: Term) -> Fewnomial:
    return Fewnomial(
        f.n,
        tuple(Term(s.coeff / t.coeff, tuple(a - b for a, b in zip(s.exponent, t.exponent))) for s in f.terms),
    )


def normalize_constant(f: Fewnomial) -> Fewnomial:
    """Divide by the term at the lexicographically smallest support point.

    The lexicographic minimum of a finite point set is always a vertex of its
    convex hull, so this is a deterministic choice of Newton-polytope vertex.
    """
    if f.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    return divide_by_term(f, f.terms[0])


def has_sign_obstruction(f: Fewnomial) -> bool:
    """True if every coefficient has the same sign (so ``f`` has no positive root)."""
    return len({c > 0 for c in f.coeffs}) == 1


@dataclass(frozen=True)
class CanonicalPair:
    """``(1 - y1 - y2, 1 + sum_i c_i y^e_i)`` plus the map back to the input.

    ``backmap`` sends canonical coordinates ``y`` to original coordinates
    ``x``.  For the trinomial case the second polynomial has exactly two
    non-constant terms, exposed as ``(c1, a, b)`` and ``(c2, c, d)``.
    """

    terms: tuple[tuple[float, tuple[float, float]], ...]
    backmap: MonomialMap
    original: FewnomialSystem | None = None

    @property
    def k(self) -> int:
        return len(self.terms)

    def _pick(self, i):
        if self.k != 2:
            raise ValueError(f"second polynomial has {self.k} non-constant terms, not 2")
        return self.terms[i]

    @property
    def c1(self) -> float:
        return self._pick(0)[0]

    @property
    def c2(self) -> float:
        return self._pick(1)[0]

    @property
    def a(self) -> float:
        return self._pick(0)[1][0]

    @property
    def b(self) -> float:
        return self._pick(0)[1][1]

    @property
    def c(self) -> float:
        return self._pick(1)[1][0]

    @property
    def d(self) -> float:
        return self._pick(1)[1][1]

    @property
    def f1(self) -> Fewnomial:
        return Fewnomial.from_pairs(2, [(1.0, (0, 0)), (-1.0, (1, 0)), (-1.0, (0, 1))])

    @property
    def f2(self) -> Fewnomial:
        return Fewnomial.from_pairs(2, [(1.0, (0, 0))] + list(self.terms))

    @property
    def system(self) -> FewnomialSystem:
        return FewnomialSystem.of(self.f1, self.f2)


def canonicalize_pair(F: FewnomialSystem, tau_rank: float = DEFAULT_TAU_RANK) -> CanonicalPair:
    """Bring a pair whose first member is a trinomial to canonical form.

    The first polynomial is divided by its odd-sign term, so it reads
    ``1 - r1 x^e1 - r2 x^e2`` with ``r1, r2 > 0``; the substitution
    ``y_i = r_i x^e_i`` turns it into ``1 - y1 - y2``.  The second polynomial
    is rewritten in ``y`` and divided by its term at the lexicographically
    smallest exponent.
    """
    if F.n != 2 or F.k != 2:
        raise DimensionError(f"expected a pair of bivariate fewnomials, got {F.k}x{F.n}")
    f1, f2 = F
    if f1.m != 3:
        raise DegenerateNewtonError(f"first polynomial has {f1.m} terms, expected 3")
    if f2.is_zero():
        raise ValueError("second polynomial is zero")
    if span_dimension(f1, tau_rank) < 2:
        raise DegenerateNewtonError("Newton polygon of the first polynomial is not two-dimensional")
    if has_sign_obstruction(f1):
        raise SignObstructionError("first polynomial is positive (or negative) on the whole orthant")
    signs = [t.coeff > 0 for t in f1.terms]
    k = next(i for i in range(3) if signs.count(signs[i]) == 1)
    div = f1.terms[k]
    rest = [t for i, t in enumerate(f1.terms) if i != k]
    rows = [tuple(a - b for a, b in zip(t.exponent, div.exponent)) for t in rest]
    if rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0] < 0:
        rest.reverse()
        rows.reverse()
    logr = [math.log(abs(t.coeff / div.coeff)) for t in rest]
    # y = r x^E  =>  log x = E^-1 (log y - log r)
    Einv = exact_inverse(rows)
    ls = tuple(-math.fsum(Einv[i][j] * logr[j] for j in range(2)) for i in range(2))
    M = MonomialMap(tuple(map(tuple, Einv)), ls)
    M.check_nonsingular(tau_rank)
    # normalize in log space so huge but balanced scalings stay representable
    items = sorted(_mapped_log_terms(f2, M), key=lambda it: it[2])
    s0, l0, e0 = items[0]
    g = _from_log_terms(2, [(s * s0, l - l0, tuple(a - b for a, b in zip(e, e0))) for s, l, e in items])
    terms = tuple((t.coeff, t.exponent) for t in g.terms[1:])
    return CanonicalPair(terms, M, F)
