"""End-to-end solvers: trinomial pairs, pyramidal systems, and the Haas family."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _isolate
from .bounds import BoundReport, FormulaId, polygon_class_report, pyramidal_bound, trinomial_m_bound
from .config import DEFAULT_CONFIG, IsolationConfig
from .core import (
    Box,
    DimensionError,
    Fewnomial,
    FewnomialSystem,
    RootCertificate,
    Status,
    Term,
    evaluate_interval,
    interval_jacobian_nonsingular,
    krawczyk_certify,
    log_jacobian,
    evaluate,
)
from .interval import IntervalR, down, exp_down, exp_up, up
from .polytope import (
    PolygonClass,
    classify_pair,
    is_pyramidal,
    mixed_volume_zero,
    numerical_rank,
)
from .transform import (
    CanonicalizationError,
    CanonicalPair,
    IllConditionedMapError,
    SignObstructionError,
    canonicalize_pair,
    has_sign_obstruction,
)
from .univariate import (
    Completeness,
    IsolationResult,
    RealExpPoly,
    TOneMinusTForm,
    form_bound,
    isolate_positive_roots,
    isolate_roots,
    negative_normal_form,
    reduce_pair,
)


class ConsistencyError(RuntimeError):
    """More roots were certified than a proven bound allows."""


class NotPyramidalError(ValueError):
    kind = "NOT_PYRAMIDAL"


# Preference among equal bounds: the more specific statement wins.
_TIE_ORDER = [
    FormulaId.SIGN_RULE,
    FormulaId.COR_ZERO,
    FormulaId.COR_POLY,
    FormulaId.THM_TRI1,
    FormulaId.THM_TRI3,
    FormulaId.LEMMA_BASIC,
]


def _best(cands: list[BoundReport]) -> BoundReport:
    return min(cands, key=lambda r: (r.value, _TIE_ORDER.index(r.formula_id) if r.formula_id in _TIE_ORDER else 99))


@dataclass(frozen=True)
class PipelineReport:
    classification: PolygonClass | None
    applied_bound: int
    provenance: FormulaId
    roots: tuple[RootCertificate, ...]
    status: str
    trace: tuple[str, ...]
    candidates: tuple[BoundReport, ...] = ()
    univariate: IsolationResult | None = None
    canonical: CanonicalPair | None = None
    undetermined: bool = False  # no search was possible; only the bound is known

    @property
    def unique(self) -> list[RootCertificate]:
        return [r for r in self.roots if r.status is Status.UNIQUE_NONDEGENERATE]

    @property
    def count_range(self) -> tuple[int, int]:
        lo = len(self.unique)
        return lo, self.applied_bound if self.undetermined else len(self.roots)

    @property
    def complete(self) -> bool:
        return self.status == Completeness.COMPLETE

    def to_dict(self) -> dict:
        return {
            "classification": self.classification.name if self.classification else None,
            "applied_bound": self.applied_bound,
            "provenance": self.provenance.value,
            "status": self.status,
            "count_range": list(self.count_range),
            "roots": [certificate_to_dict(c) for c in self.roots],
            "trace": list(self.trace),
            "candidates": [c.to_dict() for c in self.candidates],
        }


def certificate_to_dict(c: RootCertificate) -> dict:
    return {
        "status": c.status.name,
        "box": [[s.lo, s.hi] for s in c.box],
        "mid": list(c.box.mid),
        "trace": list(c.trace),
    }


# -- helpers --------------------------------------------------------------------


def _check_pair(F: FewnomialSystem):
    if F.n != 2 or F.k != 2:
        raise DimensionError(f"expected a 2x2 system, got {F.k}x{F.n}")
    if any(f.is_zero() for f in F):
        raise ValueError("both polynomials must be nonzero")


def _log_box_to_box(Z: list[IntervalR], rel: float) -> Box:
    sides = []
    for z in Z:
        lo, hi = exp_down(z.lo), exp_up(z.hi)
        r = rel * hi if math.isfinite(hi) else 0.0
        sides.append(IntervalR(max(0.0, down(lo - r)), up(hi + r)))
    return Box(tuple(sides))


def _box_encloses_zero(F: FewnomialSystem, b: Box) -> bool:
    try:
        return all(evaluate_interval(f, b).contains_zero() for f in F)
    except Exception:
        return False


def _polish(F: FewnomialSystem, z: np.ndarray, iters: int = 8) -> np.ndarray:
    """Newton iteration on ``F(exp z) = 0`` in log coordinates."""
    J = log_jacobian(F)
    for _ in range(iters):
        x = np.exp(z)
        try:
            g = np.array([evaluate(f, x) for f in F])
            M = np.array([[evaluate(p, x) if not p.is_zero() else 0.0 for p in row] for row in J])
            step = np.linalg.solve(M, g)
        except (np.linalg.LinAlgError, ValueError, OverflowError):
            break
        if not np.all(np.isfinite(step)):
            break
        z = z - step
        if np.max(np.abs(step)) <= 1e-15 * max(1.0, float(np.max(np.abs(z)))):
            break
    return z


def _krawczyk_box(F: FewnomialSystem, z: np.ndarray) -> Box | None:
    """A box around ``exp(z)`` that passes the Krawczyk test, if one is found."""
    for rel in (1e-12, 1e-10, 1e-8, 1e-6, 1e-4):
        r = [rel * max(1.0, abs(v)) for v in z]
        Z = [IntervalR(down(v - ri), up(v + ri)) for v, ri in zip(z, r)]
        b = Box(tuple(IntervalR(exp_down(s.lo), exp_up(s.hi)) for s in Z))
        if b.in_positive_orthant() and all(math.isfinite(s.hi) for s in b) and krawczyk_certify(F, b):
            return b
    return None


# -- trinomial pairs ----------------------------------------------------------


def _pair_candidates(F: FewnomialSystem, cls: PolygonClass, cfg: IsolationConfig) -> list[BoundReport]:
    m1, m2 = F.type
    cands: list[BoundReport] = []
    if any(has_sign_obstruction(f) for f in F):
        cands.append(BoundReport(0, FormulaId.SIGN_RULE, {"type": [m1, m2]}, exact=True))
    if mixed_volume_zero(F, cfg.tau_rank):
        cands.append(BoundReport(0, FormulaId.COR_ZERO, {"type": [m1, m2]}, exact=True))
    if (m1, m2) == (3, 3):
        cands.append(polygon_class_report(cls))
        cands.append(BoundReport(5, FormulaId.THM_TRI3, {"m": 3}, exact=True))
    elif min(m1, m2) <= 2:
        # a binomial or monomial member reduces the problem to one variable
        cands.append(BoundReport(pyramidal_bound(m1, m2) if min(m1, m2) == 1 else max(m1, m2) - 1,
                                 FormulaId.THM_TRI1, {"type": [m1, m2]}, exact=True))
    elif 3 in (m1, m2):
        m = m2 if m1 == 3 else m1
        cands.append(BoundReport(trinomial_m_bound(m), FormulaId.THM_TRI3, {"m": m}, exact=m == 3))
    return cands


def _canonicalize_either(F: FewnomialSystem, cfg: IsolationConfig) -> tuple[CanonicalPair, bool]:
    errors = []
    for swap in (False, True):
        G = FewnomialSystem.of(F[1], F[0]) if swap else F
        try:
            return canonicalize_pair(G, cfg.tau_rank), swap
        except SignObstructionError:
            raise
        except CanonicalizationError as e:
            errors.append(e)
    # prefer reporting conditioning trouble over a structural mismatch
    raise next((e for e in errors if isinstance(e, IllConditionedMapError)), errors[0])


def _backmap_certificate(
    F: FewnomialSystem, cp: CanonicalPair, form: TOneMinusTForm, cert: RootCertificate, cfg: IsolationConfig
) -> RootCertificate:
    ul, uh = cert.witness["u"]
    triples = form.as_triples()
    trace = list(cert.trace)
    width = cfg.refine_width
    box = None
    for attempt in range(cfg.backmap_refinements + 1):
        (l0lo, l0hi), (l1lo, l1hi) = _isolate.log_coords(ul, uh)
        Z = cp.backmap.map_log_box([IntervalR(l0lo, l0hi), IntervalR(l1lo, l1hi)])
        box = _log_box_to_box(Z, cfg.backmap_inflation)
        if cert.status is not Status.UNIQUE_NONDEGENERATE:
            return RootCertificate(box, cert.status, {"t": cert.witness["mid"]}, tuple(trace + ["backmapped"]))
        encloses = _box_encloses_zero(F, box)
        nonsing = encloses and box.in_positive_orthant() and interval_jacobian_nonsingular(F, box)
        if encloses and nonsing:
            kraw = krawczyk_certify(F, box)
            trace += [
                "backmapped through monomial map",
                "original system encloses 0 on box",
                "interval Jacobian nonsingular on box",
                "krawczyk: " + ("contracts" if kraw else "inconclusive"),
            ]
            return RootCertificate(box, Status.UNIQUE_NONDEGENERATE, {"t": cert.witness["mid"]}, tuple(trace))
        width *= 1e-2
        if width < 1e-15:
            break
        ul, uh = _isolate.refine_interval(triples, ul, uh, width, cfg)
    reason = "original system excludes 0 on box" if not _box_encloses_zero(F, box) else "Jacobian not certified"
    return RootCertificate(box, Status.POSSIBLY_DEGENERATE, {"t": cert.witness["mid"]}, tuple(trace + [reason]))


def solve_trinomial_pair(F: FewnomialSystem, cfg: IsolationConfig | None = None) -> PipelineReport:
    """Certified positive roots of a pair of bivariate fewnomials with at most three terms each."""
    cfg = DEFAULT_CONFIG if cfg is None else cfg
    _check_pair(F)
    if max(F.type) > 3 and min(F.type) > 3:
        raise ValueError(f"one member must have at most three terms, got type {F.type}")
    cls = classify_pair(F)
    cands = _pair_candidates(F, cls, cfg)
    trace = [f"classified: {cls.name}"]
    zero = [c for c in cands if c.value == 0 and c.formula_id in (FormulaId.SIGN_RULE, FormulaId.COR_ZERO)]
    if zero:
        best = _best(zero)
        trace.append(f"no positive roots ({best.formula_id.value})")
        return PipelineReport(cls, 0, best.formula_id, (), Completeness.COMPLETE, tuple(trace), tuple(cands))

    try:
        cp, swapped = _canonicalize_either(F, cfg)
    except SignObstructionError:
        raise
    except CanonicalizationError as e:
        cp = None
        reason = e
        trace.append(f"not canonicalizable: {e}")
    if cp is None:
        if isinstance(reason, IllConditionedMapError) and not is_pyramidal(F, cfg.tau_rank):
            best = _best(cands)
            return PipelineReport(cls, best.value, best.formula_id, (), Completeness.INCOMPLETE,
                                  tuple(trace), tuple(cands), undetermined=True)
        if not is_pyramidal(F, cfg.tau_rank):
            raise NotPyramidalError("pair is neither canonicalizable nor pyramidal")
        trace.append("pyramidal back-substitution")
        pyr = solve_pyramidal(F, cfg)
        cands.append(BoundReport(pyramidal_bound(*F.type), FormulaId.THM_TRI1, {"type": list(F.type)}))
        best = _best(cands)
        report = PipelineReport(cls, best.value, best.formula_id, pyr.certificates, pyr.status,
                                tuple(trace + list(pyr.trace)), tuple(cands))
        _check_consistency(report)
        return report

    trace.append("canonicalized" + (" (equations swapped)" if swapped else ""))
    form = reduce_pair(cp)
    trace.append(f"reduced to a {form.k}-term form on (0,1)")
    if form.k == 2 and form.constant != 0.0:
        nf = negative_normal_form(form)
        if nf is not None:
            cands.append(BoundReport(form_bound(form), FormulaId.LEMMA_BASIC,
                                     {"A": nf[0], "B": nf[1], "abcd": list(nf[2:])}))
    best = _best(cands)
    uni = isolate_roots(form, cfg)
    trace.append(f"isolated: {uni.count_range} ({uni.status})")
    roots = tuple(sorted((_backmap_certificate(F, cp, form, c, cfg) for c in uni.certificates),
                         key=lambda c: c.box.mid))
    status = Completeness.COMPLETE
    if not uni.complete or any(r.status is not Status.UNIQUE_NONDEGENERATE for r in roots):
        status = Completeness.INCOMPLETE
    report = PipelineReport(cls, best.value, best.formula_id, roots, status, tuple(trace), tuple(cands), uni, cp)
    _check_consistency(report)
    return report


def _check_consistency(report: PipelineReport):
    if len(report.unique) > report.applied_bound:
        raise ConsistencyError(
            f"certified {len(report.unique)} roots but {report.provenance.value} allows {report.applied_bound}"
        )


# -- pyramidal systems ---------------------------------------------------------


@dataclass(frozen=True)
class PyramidalResult:
    certificates: tuple[RootCertificate, ...]
    status: str
    trace: tuple[str, ...] = ()
    bound: int = 0

    @property
    def unique(self) -> list[RootCertificate]:
        return [c for c in self.certificates if c.status is Status.UNIQUE_NONDEGENERATE]

    @property
    def count_range(self) -> tuple[int, int]:
        return len(self.unique), len(self.certificates)


def _line_direction(f: Fewnomial, tau_rank: float):
    """If the support of ``f`` lies on a line, return ``(base point, direction, positions)``."""
    pts = f.support
    o = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, o)) for p in pts[1:]]
    if numerical_rank(diffs, tau_rank) != 1:
        return None
    v = max(diffs, key=lambda d: sum(x * x for x in d))
    vv = sum(x * x for x in v)
    pos = [0.0] + [sum(x * y for x, y in zip(d, v)) / vv for d in diffs]
    return o, v, pos


def _substitute(f: Fewnomial, v, p: int, log_z: float) -> Fewnomial:
    """Eliminate ``x_p`` using ``sum_j v_j log x_j = log z``."""
    out = []
    vp = Fraction(v[p])
    for t in f.terms:
        ep = Fraction(t.exponent[p])
        ratio = ep / vp
        e = tuple(
            float(Fraction(t.exponent[j]) - ratio * Fraction(v[j])) for j in range(f.n) if j != p
        )
        mag = math.log(abs(t.coeff)) + float(ratio) * log_z
        if mag > 709.0:
            raise OverflowError("substituted coefficient overflows")
        out.append(Term(math.copysign(math.exp(mag), t.coeff), e))
    return Fewnomial(f.n - 1, tuple(out))


class _Incomplete(Exception):
    pass


def _pyramidal_points(polys: list[Fewnomial], n: int, cfg: IsolationConfig, notes: list[str]) -> list[tuple[float, ...]]:
    """Approximate log-coordinate roots by recursive back-substitution."""
    if n == 0:
        return [()]
    if any(f.is_zero() for f in polys):
        raise _Incomplete("an equation vanished identically after substitution")
    if any(f.m == 1 or has_sign_obstruction(f) for f in polys):
        return []
    pick = None
    for i, f in enumerate(polys):
        line = _line_direction(f, cfg.tau_rank)
        if line is not None:
            pick = (i, line)
            break
    if pick is None:
        raise NotPyramidalError("no equation has a one-dimensional support after substitution")
    i, (o, v, pos) = pick
    f = polys[i]
    p = RealExpPoly(tuple((t.coeff, s) for t, s in zip(f.terms, pos)))
    res = isolate_positive_roots(p, cfg)
    if not res.complete:
        notes.append(f"univariate stage incomplete: {res.count_range}")
        if res.unresolved:
            raise _Incomplete("univariate stage left unresolved intervals")
    rest = polys[:i] + polys[i + 1:]
    piv = max(range(n), key=lambda j: abs(v[j]))
    out = []
    for cert in res.unique:
        ul, uh = cert.witness["u"]
        log_z = 0.5 * (ul + uh)  # u is log z in the positive-axis mode
        sub = [_substitute(g, v, piv, log_z) for g in rest]
        for pt in _pyramidal_points(sub, n - 1, cfg, notes):
            others = list(pt)
            s = math.fsum(v[j] * others[j if j < piv else j - 1] for j in range(n) if j != piv)
            lp = (log_z - s) / v[piv]
            out.append(tuple(others[:piv] + [lp] + others[piv:]))
    return out


def solve_pyramidal(F: FewnomialSystem, cfg: IsolationConfig | None = None) -> PyramidalResult:
    """Positive roots of a square pyramidal system by back-substitution.

    Each recursion level isolates the roots of an equation whose support is
    one-dimensional, eliminates one variable, and recurses.  Every final
    root is polished by Newton's method in log coordinates and certified on
    the full system by the Krawczyk test.
    """
    cfg = DEFAULT_CONFIG if cfg is None else cfg
    if F.k != F.n:
        raise DimensionError("pyramidal solving needs a square system")
    if not is_pyramidal(F, cfg.tau_rank):
        raise NotPyramidalError("support spans do not form a pyramidal system")
    bound = pyramidal_bound(*F.type)
    notes: list[str] = []
    status = Completeness.COMPLETE
    try:
        pts = _pyramidal_points(list(F.polys), F.n, cfg, notes)
    except _Incomplete as e:
        notes.append(str(e))
        return PyramidalResult((), Completeness.INCOMPLETE, tuple(notes), bound)
    certs = []
    for z0 in pts:
        z = _polish(F, np.array(z0, dtype=float))
        b = _krawczyk_box(F, z)
        if b is not None:
            certs.append(RootCertificate(b, Status.UNIQUE_NONDEGENERATE, {"log": tuple(z)},
                                         ("back-substitution", "krawczyk contracts on full system")))
        else:
            status = Completeness.INCOMPLETE
            r = [1e-8 * max(1.0, abs(v)) for v in z]
            bb = Box(tuple(IntervalR(exp_down(v - ri), exp_up(v + ri)) for v, ri in zip(z, r)))
            certs.append(RootCertificate(bb, Status.POSSIBLY_DEGENERATE, {"log": tuple(z)},
                                         ("back-substitution", "krawczyk inconclusive")))
    certs.sort(key=lambda c: c.box.mid)
    for a, b in zip(certs, certs[1:]):
        if all(s.intersect(t) is not None for s, t in zip(a.box, b.box)):
            status = Completeness.INCOMPLETE
            notes.append("two candidate boxes overlap")
    if notes and status == Completeness.COMPLETE and any("incomplete" in n for n in notes):
        status = Completeness.INCOMPLETE
    unique = sum(c.status is Status.UNIQUE_NONDEGENERATE for c in certs)
    if unique > bound:
        raise ConsistencyError(f"certified {unique} roots but the product bound is {bound}")
    return PyramidalResult(tuple(certs), status, tuple(notes), bound)


# -- fixtures and reports -------------------------------------------------------


def haas_family(k: int) -> FewnomialSystem:
    """``2k x 2k`` system of ``k`` decoupled Haas blocks in ``(x_1, y_1, ..., x_k, y_k)``."""
    if int(k) != k or k < 1:
        raise ValueError("k must be a positive integer")
    n = 2 * k
    polys = []

    def e(i, p):
        v = [0.0] * n
        v[i] = float(p)
        return tuple(v)

    for b in range(k):
        x, y = 2 * b, 2 * b + 1
        polys.append(Fewnomial.from_pairs(n, [(1.0, e(x, 108)), (1.1, e(y, 54)), (-1.1, e(y, 1))]))
        polys.append(Fewnomial.from_pairs(n, [(1.0, e(y, 108)), (1.1, e(x, 54)), (-1.1, e(x, 1))]))
    return FewnomialSystem(n, tuple(polys))


def solve(F: FewnomialSystem, cfg: IsolationConfig | None = None):
    """Dispatch to the trinomial-pair pipeline or the pyramidal solver."""
    if F.n == 2 and F.k == 2 and min(F.type) <= 3:
        return solve_trinomial_pair(F, cfg)
    if F.k == F.n and is_pyramidal(F, (cfg or DEFAULT_CONFIG).tau_rank):
        return solve_pyramidal(F, cfg)
    raise NotPyramidalError(
        "only pairs with a trinomial member and pyramidal systems are supported"
    )


def count_report(F: FewnomialSystem, cfg: IsolationConfig | None = None) -> tuple[int, int]:
    """``(certified unique, certified unique + uncertified candidates)``."""
    return solve(F, cfg).count_range


def _univariate_product(n: int, i: int, roots, power: int = 1) -> Fewnomial:
    """``prod_r (x_i - r)^power`` as an ``n``-variate fewnomial."""
    e = [0.0] * n
    e[i] = 1.0
    x = Fewnomial.from_pairs(n, [(1.0, tuple(e))])
    out = Fewnomial.constant(n, 1.0)
    for r in roots:
        for _ in range(power):
            out = out * (x - float(r))
    return out


def product_system(n: int, roots=(1, 2)) -> FewnomialSystem:
    """``(prod_r (x_1 - r), ..., prod_r (x_n - r))``: ``len(roots)^n`` positive roots."""
    if int(n) != n or n < 1:
        raise ValueError("n must be a positive integer")
    return FewnomialSystem(n, tuple(_univariate_product(n, i, roots) for i in range(n)))


def degenerate_octant_system() -> FewnomialSystem:
    """``(x1(x3-1), x2(x3-1), prod (x1-i)^2 + prod (x2-i)^2)`` for ``i = 1..5``.

    Type ``(2, 2, 21)`` with the 25 singular roots ``(i, j, 1)``.
    """
    P = lambda *pairs: Fewnomial.from_pairs(3, pairs)
    g1 = P((1.0, (1, 0, 1)), (-1.0, (1, 0, 0)))
    g2 = P((1.0, (0, 1, 1)), (-1.0, (0, 1, 0)))
    g3 = _univariate_product(3, 0, range(1, 6), 2) + _univariate_product(3, 1, range(1, 6), 2)
    return FewnomialSystem.of(g1, g2, g3)
