"""Curvature and tangency conditions for plane fewnomial curves.

A point of ``{f = 0}`` in the positive quadrant is an inflection or a
singular point only if it also solves

    q = f_11 f_2^2 - 2 f_12 f_1 f_2 + f_22 f_1^2,

where ``f_i`` are true partial derivatives.  For a trinomial
``1 + S1 + S2`` the product ``x1^2 x2^2 q`` is a homogeneous cubic in the
monomial values ``(S1, S2)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .bounds import BoundReport, FormulaId, khovanski_bound, kprime_bound, line_curve_bound
from .core import DimensionError, Fewnomial, derivative, evaluate
from .polytope import PolygonClass

__all__ = [
    "CurvatureSystem",
    "FeatureKind",
    "HomogeneousForm",
    "curvature_numerator",
    "curvature_system",
    "trinomial_curvature_cubic",
    "trinomial_inflection_condition",
    "feature_bound",
    "line_curve_bound",
    "implicit_curvature",
]


def _clear_monomial(q: Fewnomial) -> Fewnomial:
    """Multiply by the smallest monomial making every exponent nonnegative.

    After the shift each coordinate attains exponent 0 on some term.
    """
    if q.is_zero():
        return q
    lows = [min(e[i] for e in q.support) for i in range(q.n)]
    return q.shift([-x for x in lows])


def curvature_numerator(f: Fewnomial, n: int = 2, *, normalize: bool = True) -> Fewnomial:
    """``f_11 f_2^2 - 2 f_12 f_1 f_2 + f_22 f_1^2`` expanded as a fewnomial.

    With ``normalize`` the result is multiplied by the minimal monomial
    that clears negative exponents (see :func:`_clear_monomial`); this does
    not change its zero set in the open quadrant.
    """
    if f.n != 2 or n != 2:
        raise DimensionError("curvature is defined for plane curves (n = 2)")
    if f.is_zero():
        raise ValueError("the zero polynomial does not define a curve")
    f1, f2 = derivative(f, 1), derivative(f, 2)
    f11, f12, f22 = derivative(f1, 1), derivative(f1, 2), derivative(f2, 2)
    q = f11 * f2 * f2 - 2.0 * (f12 * f1 * f2) + f22 * f1 * f1
    return _clear_monomial(q) if normalize else q


@dataclass(frozen=True)
class CurvatureSystem:
    """The pair ``(f, q)`` whose common positive zeros contain every inflection and singular point."""

    f: Fewnomial
    q: Fewnomial

    def __call__(self, x) -> tuple[float, float]:
        return evaluate(self.f, x), evaluate(self.q, x)


def curvature_system(f: Fewnomial) -> CurvatureSystem:
    return CurvatureSystem(f, curvature_numerator(f))


@dataclass(frozen=True)
class HomogeneousForm:
    """``sum_i coeffs[i] * S1^(d-i) * S2^i`` with ``d = len(coeffs) - 1``."""

    coeffs: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, s1: float, s2: float) -> float:
        d = self.degree
        return math.fsum(c * s1 ** (d - i) * s2 ** i for i, c in enumerate(self.coeffs))

    def scaled(self, k: float) -> "HomogeneousForm":
        return HomogeneousForm(tuple(k * c for c in self.coeffs))

    def times_linear(self, u: float, v: float) -> "HomogeneousForm":
        """Product with ``u S1 + v S2``."""
        out = [0.0] * (len(self.coeffs) + 1)
        for i, c in enumerate(self.coeffs):
            out[i] += c * u
            out[i + 1] += c * v
        return HomogeneousForm(tuple(out))


def _lin(u: float, v: float) -> HomogeneousForm:
    return HomogeneousForm((u, v))


def _mul(p: HomogeneousForm, q: HomogeneousForm) -> HomogeneousForm:
    return HomogeneousForm(tuple(float(v) for v in np.convolve(p.coeffs, q.coeffs)))


def trinomial_curvature_cubic(a: float, b: float, c: float, d: float) -> HomogeneousForm:
    """Cubic ``x1^2 x2^2 q`` for ``f = 1 + S1 + S2``, ``S1 = A x1^a x2^b``, ``S2 = B x1^c x2^d``.

    The coefficients ``A, B`` are absorbed into ``S1, S2``.
    """
    L1 = _lin(a, c)                       # x1 f_1
    L2 = _lin(b, d)                       # x2 f_2
    Q11 = _lin(a * (a - 1), c * (c - 1))  # x1^2 f_11
    Q12 = _lin(a * b, c * d)              # x1 x2 f_12
    Q22 = _lin(b * (b - 1), d * (d - 1))  # x2^2 f_22
    t1 = _mul(Q11, _mul(L2, L2))
    t2 = _mul(Q12, _mul(L1, L2))
    t3 = _mul(Q22, _mul(L1, L1))
    return HomogeneousForm(tuple(x - 2.0 * y + z for x, y, z in zip(t1.coeffs, t2.coeffs, t3.coeffs)))


def trinomial_inflection_condition(a: float, b: float, c: float, d: float, cls: PolygonClass) -> HomogeneousForm:
    """The reduced inflection condition for a trinomial in one of the polygon normal forms.

    * TRIANGLE (``a = d > 0``, ``b = c = 0``): ``S1 + S2``
    * QUADRILATERAL (``b = c = 0``, ``a, d > 0``): ``a(d-1) S1 + d(a-1) S2``
    * PENTAGON (``b = 0``, ``a, c, d > 0``):
      ``a^2(d-1) S1^2 + a(ad-d-2c) S1 S2 - c(c+d) S2^2``

    Each is the cubic of :func:`trinomial_curvature_cubic` with the factors
    that cannot vanish in the open quadrant removed.
    """
    cls = PolygonClass[cls] if isinstance(cls, str) else cls
    if cls is PolygonClass.TRIANGLE:
        if not (a == d and a > 0 and b == 0 and c == 0):
            raise ValueError("triangle normal form needs a = d > 0 and b = c = 0")
        return HomogeneousForm((1.0, 1.0))
    if cls is PolygonClass.QUADRILATERAL:
        if not (b == 0 and c == 0 and a > 0 and d > 0):
            raise ValueError("quadrilateral normal form needs b = c = 0 and a, d > 0")
        return HomogeneousForm((a * (d - 1), d * (a - 1)))
    if cls is PolygonClass.PENTAGON:
        if not (b == 0 and a > 0 and c > 0 and d > 0):
            raise ValueError("pentagon normal form needs b = 0 and a, c, d > 0")
        return HomogeneousForm((a * a * (d - 1), a * (a * d - d - 2 * c), -c * (c + d)))
    raise ValueError(f"no inflection condition for class {cls.name}")


class FeatureKind(enum.Enum):
    INFLECTION = "INFLECTION"
    VERTICAL_TANGENCY = "VERTICAL_TANGENCY"
    SINGULAR = "SINGULAR"


def feature_bound(kind: FeatureKind | str, m: int, n: int = 2) -> BoundReport:
    """Bound on inflection points, vertical tangencies or singular points of an ``m``-nomial curve."""
    kind = FeatureKind(kind) if isinstance(kind, str) else kind
    if int(m) != m or m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    m = int(m)
    inputs = {"kind": kind.value, "m": m, "n": n}
    if m <= 2:
        # binomial curves are monomial graphs: no isolated features
        return BoundReport(0, FormulaId.CURVE_FEATURES, inputs, exact=True)
    if m == 3 and kind is FeatureKind.INFLECTION:
        return BoundReport(3, FormulaId.CURVE_FEATURES, inputs, exact=True)
    if m == 3 and kind is FeatureKind.VERTICAL_TANGENCY:
        return BoundReport(1, FormulaId.CURVE_FEATURES, inputs, exact=True)
    if kind is FeatureKind.INFLECTION:
        return BoundReport(None, FormulaId.CURVE_FEATURES, inputs,
                           note="no closed form for m > 3")
    # S(m), V(m) <= K(n, m), with K replaced by Khovanski's formula
    kp = kprime_bound(n, m) if m == 3 else None
    v = khovanski_bound(n, m)
    note = f"K({n},{m}) <= (n+1)^m 2^(m(m-1)/2) = {v}"
    if kind is FeatureKind.SINGULAR and kp is not None:
        v, note = min(v, 3 * kp.value), f"S+I <= 3 K'({n},3) <= {3 * kp.value}"
    return BoundReport(v, FormulaId.CURVE_FEATURES, inputs, note=note)


# -- numerics -------------------------------------------------------------


def implicit_curvature(f: Fewnomial, x) -> float:
    """Signed curvature numerator of ``{f = 0}`` at ``x``, up to a positive factor.

    Evaluates ``q`` divided by ``|grad f|^3``; the sign is what matters.
    """
    f1, f2 = derivative(f, 1), derivative(f, 2)
    g1, g2 = evaluate(f1, x), evaluate(f2, x)
    q = evaluate(curvature_numerator(f, normalize=False), x)
    nrm = math.hypot(g1, g2)
    return q / nrm ** 3 if nrm else math.inf
