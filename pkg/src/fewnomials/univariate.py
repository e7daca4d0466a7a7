"""Univariate real-exponent sums: sign rules, the t/(1-t) forms, Rolle
cascades and certified root isolation.

Two univariate shapes appear:

* :class:`RealExpPoly` -- ``sum c_i x^e_i`` on ``(0, inf)``;
* :class:`TOneMinusTForm` -- ``1 + sum c_i t^a_i (1-t)^b_i`` on ``(0, 1)``.

Both are isolated by the same engine: ``x^e`` equals
``t^e (1-t)^-e`` with ``t = x / (1 + x)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import _isolate
from .config import DEFAULT_CONFIG, ConfigError, IsolationConfig
from .core import Box, RootCertificate, Status
from .interval import IntervalR, down, up


def sign_alternations(coeffs: Iterable[float]) -> int:
    """Number of sign changes between consecutive nonzero entries."""
    count, prev = 0, 0
    for c in coeffs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


@dataclass(frozen=True)
class RealExpPoly:
    """``sum c_i x^e_i`` with strictly increasing real exponents."""

    terms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        merged: dict[float, float] = {}
        for c, e in self.terms:
            e = float(e) + 0.0
            if not math.isfinite(e) or not math.isfinite(c):
                raise ValueError("coefficients and exponents must be finite")
            merged[e] = merged.get(e, 0.0) + float(c)
        object.__setattr__(
            self, "terms", tuple((c, e) for e, c in sorted(merged.items()) if c != 0.0)
        )

    @classmethod
    def of(cls, *pairs: tuple[float, float]) -> "RealExpPoly":
        return cls(tuple(pairs))

    @property
    def coeffs(self) -> tuple[float, ...]:
        return tuple(c for c, _ in self.terms)

    @property
    def exponents(self) -> tuple[float, ...]:
        return tuple(e for _, e in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __call__(self, x: float) -> float:
        if not x > 0:
            raise ValueError("evaluation point must be positive")
        lx = math.log(x)
        return math.fsum(math.copysign(math.exp(math.log(abs(c)) + e * lx), c) for c, e in self.terms)

    def as_triples(self) -> list[tuple[float, float, float]]:
        return [(c, e, -e) for c, e in self.terms]


@dataclass(frozen=True)
class TOneMinusTForm:
    """``f(t) = 1 + sum_i c_i t^a_i (1-t)^b_i`` on the open interval (0, 1).

    Terms with the same exponent pair are merged; a pair ``(0, 0)`` is folded
    into the leading constant.
    """

    terms: tuple[tuple[float, float, float], ...]
    constant: float = 1.0

    def __post_init__(self):
        merged: dict[tuple[float, float], float] = {}
        const = float(self.constant)
        for c, a, b in self.terms:
            a, b = float(a) + 0.0, float(b) + 0.0
            if not all(math.isfinite(v) for v in (c, a, b)):
                raise ValueError("coefficients and exponents must be finite")
            if a == 0.0 and b == 0.0:
                const += float(c)
                continue
            merged[(a, b)] = merged.get((a, b), 0.0) + float(c)
        object.__setattr__(
            self, "terms", tuple((c, a, b) for (a, b), c in sorted(merged.items()) if c != 0.0)
        )
        object.__setattr__(self, "constant", const)

    @classmethod
    def of(cls, *triples: tuple[float, float, float]) -> "TOneMinusTForm":
        return cls(tuple(triples))

    @property
    def k(self) -> int:
        return len(self.terms)

    def __call__(self, t: float) -> float:
        if not 0 < t < 1:
            raise ValueError("evaluation point must lie in (0, 1)")
        lt, l1 = math.log(t), math.log1p(-t)
        return self.constant + math.fsum(
            math.copysign(math.exp(math.log(abs(c)) + a * lt + b * l1), c) for c, a, b in self.terms
        )

    def at_logit(self, u: float) -> float:
        """``f`` at ``t = 1 / (1 + exp(-u))`` without forming ``t``."""
        lt = -_isolate.DOUBLE.softplus(-u)
        l1 = -_isolate.DOUBLE.softplus(u)
        return self.constant + math.fsum(
            math.copysign(math.exp(math.log(abs(c)) + a * lt + b * l1), c) for c, a, b in self.terms
        )

    def derivative(self, t: float) -> float:
        lt, l1 = math.log(t), math.log1p(-t)
        return math.fsum(
            c * math.exp(a * lt + b * l1) * (a * (1 - t) - b * t) / (t * (1 - t)) for c, a, b in self.terms
        )

    def as_triples(self) -> list[tuple[float, float, float]]:
        out = [(c, a, b) for c, a, b in self.terms]
        if self.constant != 0.0:
            out.insert(0, (self.constant, 0.0, 0.0))
        return out


def descartes_bound(p: RealExpPoly) -> int:
    """Sign alternations of the coefficients in exponent order."""
    return sign_alternations(p.coeffs)


# -- reduction of a canonical pair --------------------------------------------


def reduce_pair(cp) -> TOneMinusTForm:
    """Substitute ``(y1, y2) = (t, 1 - t)`` into the canonical second polynomial."""
    return TOneMinusTForm(tuple((c, e[0], e[1]) for c, e in cp.terms))


# -- Rolle cascade ---------------------------------------------------------------


def _poly_add(p: dict, key, val):
    v = p.get(key, 0.0) + val
    if v == 0.0:
        p.pop(key, None)
    else:
        p[key] = v


@dataclass(frozen=True)
class CascadeNode:
    """``t^alpha (1-t)^beta q(t, 1-t)`` with ``q`` homogeneous of degree ``degree``.

    ``q`` maps exponent pairs ``(i, j)``, ``i + j = degree``, to coefficients
    of ``x1^i x2^j``.
    """

    alpha: float
    beta: float
    q: Mapping[tuple[int, int], float]
    degree: int

    def __post_init__(self):
        q = {(int(i), int(j)): float(c) for (i, j), c in dict(self.q).items() if c != 0.0}
        for i, j in q:
            if i + j != self.degree or i < 0 or j < 0:
                raise ValueError(f"monomial x1^{i} x2^{j} does not have degree {self.degree}")
        object.__setattr__(self, "q", q)

    @classmethod
    def from_constant(cls, alpha: float, beta: float, c: float = 1.0) -> "CascadeNode":
        return cls(alpha, beta, {(0, 0): c}, 0)

    @property
    def is_zero(self) -> bool:
        return not self.q

    def q_at(self, x1: float, x2: float) -> float:
        return math.fsum(c * x1**i * x2**j for (i, j), c in self.q.items())

    def __call__(self, t: float) -> float:
        return t**self.alpha * (1 - t) ** self.beta * self.q_at(t, 1 - t)


def cascade_step(node: CascadeNode) -> CascadeNode:
    """Node for ``d/dt`` of ``t^alpha (1-t)^beta p(t, 1-t)``.

    The derivative is ``t^(alpha-1) (1-t)^(beta-1) q(t, 1-t)`` with
    ``q = (alpha x2 - beta x1) p + x1 x2 (p_1 - p_2)``, where ``p_i`` is the
    partial of ``p`` in ``x_i``.  ``q`` is homogeneous of one degree higher.
    """
    a, b, p = node.alpha, node.beta, node.q
    q: dict[tuple[int, int], float] = {}
    for (i, j), c in p.items():
        _poly_add(q, (i, j + 1), a * c)
        _poly_add(q, (i + 1, j), -b * c)
        if i:
            _poly_add(q, (i, j + 1), i * c)  # x1 x2 * i x1^(i-1) x2^j
        if j:
            _poly_add(q, (i + 1, j), -j * c)
    return CascadeNode(a - 1, b - 1, q, node.degree + 1)


def cascade_vanishes_identically(node: CascadeNode) -> bool:
    """Closed-form test for ``cascade_step(node).is_zero``.

    The derivative vanishes iff ``t^alpha (1-t)^beta p(t, 1-t)`` is
    constant, i.e. ``p = k x1^(-alpha) x2^(-beta)`` with ``-alpha, -beta``
    nonnegative integers summing to the degree of ``p``.
    """
    if node.is_zero:
        return True
    if len(node.q) != 1:
        return False
    ((i, j),) = node.q
    return i == -node.alpha and j == -node.beta


def rolle_root_bound(form: TOneMinusTForm) -> int:
    """``2^(k+1) - 2`` for a form with ``k >= 1`` non-constant terms."""
    k = form.k
    if k < 1:
        raise ValueError("the form has no non-constant terms")
    return 2 ** (k + 1) - 2


# -- the second-derivative cubics for two-term forms ----------------------------


@dataclass(frozen=True)
class CubicPair:
    """Cubic certificates for ``1 - A t^a (1-t)^b - B t^c (1-t)^d``.

    Coefficients are listed from ``u^3`` down to the constant.  With
    ``g(t) = (A/B) t^(a-c) (1-t)^(b-d) (-a(1-t) + b t) - c(1-t) + d t`` the
    identities

        F((1-t)/t)    = (B/A) t^alpha (1-t)^beta  g''(t)
        Fhat((1-t)/t) = (A/B) t^gamma (1-t)^delta ghat''(t)

    hold with ``ghat = (B/A) t^(c-a) (1-t)^(d-b) g``.
    """

    F_coeffs: tuple[float, float, float, float]
    Fhat_coeffs: tuple[float, float, float, float]
    A: float
    B: float
    a: float
    b: float
    c: float
    d: float

    @property
    def alpha(self) -> float:
        return self.c - self.a - 1

    @property
    def beta(self) -> float:
        return 2 - self.b + self.d

    @property
    def gamma(self) -> float:
        return self.a - self.c - 1

    @property
    def delta(self) -> float:
        return 2 + self.b - self.d

    @property
    def ratio(self) -> float:
        return self.A / self.B

    def g(self, t: float) -> float:
        a, b, c, d = self.a, self.b, self.c, self.d
        return self.ratio * t ** (a - c) * (1 - t) ** (b - d) * (-a * (1 - t) + b * t) - c * (1 - t) + d * t

    def ghat(self, t: float) -> float:
        return (1 / self.ratio) * t ** (self.c - self.a) * (1 - t) ** (self.d - self.b) * self.g(t)

    def F(self, u: float) -> float:
        k3, k2, k1, k0 = self.F_coeffs
        return ((k3 * u + k2) * u + k1) * u + k0

    def Fhat(self, u: float) -> float:
        k3, k2, k1, k0 = self.Fhat_coeffs
        return ((k3 * u + k2) * u + k1) * u + k0

    @property
    def M(self) -> int:
        return max(sign_alternations(self.F_coeffs[::-1]), sign_alternations(self.Fhat_coeffs[::-1]))


def _cubic(a, b, c, d):
    return (
        -a * (a - c) * (a - c - 1),
        (a - c) * (2 * a * (b - d + 1) + b * (a - c + 1)),
        (d - b) * (a * (b - d + 1) + 2 * b * (a - c + 1)),
        b * (b - d) * (b - d - 1),
    )


def derivative_cubics(A: float, B: float, a: float, b: float, c: float, d: float) -> CubicPair:
    if not (A > 0 and B > 0):
        raise ValueError("A and B must be positive")
    return CubicPair(_cubic(a, b, c, d), _cubic(c, d, a, b), A, B, a, b, c, d)


def certified_bound_trinomial(A: float, B: float, a: float, b: float, c: float, d: float) -> int:
    """Root bound ``min(5, M + 3)`` for ``1 - A t^a(1-t)^b - B t^c(1-t)^d`` on (0, 1)."""
    return min(5, derivative_cubics(A, B, a, b, c, d).M + 3)


def negative_normal_form(form: TOneMinusTForm) -> tuple[float, float, float, float, float, float] | None:
    """Rewrite a two-term form as ``1 - A t^a(1-t)^b - B t^c(1-t)^d`` (same roots).

    Divides by the term whose sign differs from the other two.  Returns
    ``None`` when all three signs agree (no roots at all).
    """
    if form.k != 2 or form.constant == 0.0:
        raise ValueError("need a form with a constant and exactly two terms")
    trip = [(form.constant, 0.0, 0.0)] + list(form.terms)
    signs = [c > 0 for c, _, _ in trip]
    if len(set(signs)) == 1:
        return None
    k = next(i for i in range(3) if signs.count(signs[i]) == 1)
    ck, ak, bk = trip[k]
    rest = [trip[i] for i in range(3) if i != k]
    # f / ck = 1 + sum (c/ck) t^(a-ak) (1-t)^(b-bk), both ratios negative
    (c1, a1, b1), (c2, a2, b2) = rest
    return (-c1 / ck, -c2 / ck, a1 - ak, b1 - bk, a2 - ak, b2 - bk)


def form_bound(form: TOneMinusTForm) -> int:
    """Best closed-form bound available for the number of roots of ``form`` in (0, 1)."""
    if form.k == 0:
        return 0
    if form.k == 2 and form.constant != 0.0:
        nf = negative_normal_form(form)
        if nf is None:
            return 0
        A, B, a, b, c, d = nf
        return min(rolle_root_bound(form), certified_bound_trinomial(A, B, a, b, c, d))
    return rolle_root_bound(form)


# -- isolation ---------------------------------------------------------------


class Completeness:
    COMPLETE = "COMPLETE"
    INCOMPLETE = "INCOMPLETE"


@dataclass(frozen=True)
class IsolationResult:
    """Certificates for the roots of a univariate form, sorted left to right."""

    certificates: tuple[RootCertificate, ...]
    status: str
    subdivisions: int = 0
    escalations: int = 0
    logit_boxes: tuple[tuple[float, float], ...] = ()
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def complete(self) -> bool:
        return self.status == Completeness.COMPLETE

    @property
    def unique(self) -> list[RootCertificate]:
        return [c for c in self.certificates if c.status is Status.UNIQUE_NONDEGENERATE]

    @property
    def unresolved(self) -> list[RootCertificate]:
        return [c for c in self.certificates if c.status is Status.UNRESOLVED]

    @property
    def count_range(self) -> tuple[int, int]:
        u = len(self.unique)
        return u, u + len(self.unresolved)

    @property
    def roots(self) -> list[float]:
        """Midpoints of the unique-root boxes."""
        return [c.witness["mid"] for c in self.unique]


def _sigmoid_bounds(ul: float, uh: float) -> tuple[float, float]:
    lo = 0.0 if ul == -math.inf else down(1.0 / (1.0 + math.exp(-ul)) if ul > -700 else math.exp(ul), 4)
    hi = 1.0 if uh == math.inf else up(1.0 / (1.0 + math.exp(-uh)) if uh > -700 else math.exp(uh), 4)
    return max(lo, 0.0), min(hi, 1.0)


def _exp_bounds(ul: float, uh: float) -> tuple[float, float]:
    lo = 0.0 if ul == -math.inf else (down(math.exp(ul), 4) if ul < 709 else 1.7976931348623157e308)
    hi = math.inf if uh == math.inf or uh > 709 else up(math.exp(uh), 4)
    return max(lo, 0.0), hi


def _sigmoid(u: float) -> float:
    if u >= 0:
        return 1.0 / (1.0 + math.exp(-u))
    e = math.exp(u)
    return e / (1.0 + e)


def _check_cfg(cfg: IsolationConfig | None) -> IsolationConfig:
    cfg = DEFAULT_CONFIG if cfg is None else cfg
    if not cfg.min_width > 0:
        raise ConfigError("min_width must be positive")
    return cfg


def _package(raw: _isolate.RawResult, coord: str) -> IsolationResult:
    certs = []
    for r in raw.roots:
        if coord == "t":
            lo, hi = _sigmoid_bounds(r.ul, r.uh)
            mid_u = 0.5 * (r.ul + r.uh) if math.isfinite(r.ul + r.uh) else (r.ul if math.isfinite(r.ul) else r.uh)
            mid = _sigmoid(mid_u) if math.isfinite(mid_u) else (lo + hi) / 2
        else:
            lo, hi = _exp_bounds(r.ul, r.uh)
            mid_u = 0.5 * (r.ul + r.uh) if math.isfinite(r.ul + r.uh) else (r.ul if math.isfinite(r.ul) else r.uh)
            mid = math.exp(mid_u) if math.isfinite(mid_u) and mid_u < 709 else (lo + hi) / 2
        if lo > hi:
            lo, hi = hi, lo
        status = Status.UNIQUE_NONDEGENERATE if r.unique else Status.UNRESOLVED
        trace = r.trace + (("extended precision",) if r.extended else ())
        certs.append(
            RootCertificate(
                Box((IntervalR(lo, hi),)),
                status,
                {"u": (r.ul, r.uh), "mid": mid, "coordinate": coord},
                trace,
            )
        )
    status = Completeness.COMPLETE if raw.complete else Completeness.INCOMPLETE
    return IsolationResult(
        tuple(certs),
        status,
        raw.subdivisions,
        raw.escalations,
        tuple((r.ul, r.uh) for r in raw.roots),
        tuple(raw.notes),
    )


def isolate_roots(form: TOneMinusTForm, cfg: IsolationConfig | None = None) -> IsolationResult:
    """Certified isolation of the roots of ``form`` in (0, 1).

    Boxes are in ``t``; the exact logit intervals are kept in each
    certificate's witness under ``"u"``.
    """
    cfg = _check_cfg(cfg)
    triples = form.as_triples()
    if not triples:
        return IsolationResult((), Completeness.COMPLETE)
    if len({c > 0 for c, _, _ in triples}) == 1:
        return IsolationResult((), Completeness.COMPLETE, notes=("all coefficients share a sign",))
    return _package(_isolate.isolate_triples(triples, cfg), "t")


def isolate_positive_roots(p: RealExpPoly, cfg: IsolationConfig | None = None) -> IsolationResult:
    """Certified isolation of the roots of ``p`` in (0, inf); boxes are in ``x``."""
    cfg = _check_cfg(cfg)
    if len(p) == 0:
        raise ValueError("the zero polynomial has no isolated roots")
    if descartes_bound(p) == 0:
        return IsolationResult((), Completeness.COMPLETE, notes=("no sign alternation",))
    return _package(_isolate.isolate_triples(p.as_triples(), cfg), "x")
