"""Certified isolation of the zeros of ``sum_j c_j t^a_j (1-t)^b_j`` on (0, 1).

Work happens in the logit coordinate ``u = log(t / (1 - t))``, where

    log t = -softplus(-u),   log(1 - t) = -softplus(u),

so points arbitrarily close to 0 or 1 are represented without cancellation.
Each term is ``c_j exp(E_j(u))`` with ``E_j = a_j log t + b_j log(1-t)``;
``E_j`` has derivative ``a_j (1-t) - b_j t`` in ``u``, which changes sign at
most once, so exact ranges of ``E_j`` over an interval come from its
endpoints and the one critical point.  Enclosures are scaled by
``exp(-max E_j)`` before summing, which keeps signs and avoids overflow.

Two arithmetic backends share the same code: hardware doubles with padded
rounding, and mpmath floats at a higher working precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .interval import _EPS, _TINY


# -- arithmetic backends ------------------------------------------------------


class _DoubleBackend:
    name = "double"
    inf = math.inf

    @staticmethod
    def num(x):
        return float(x)

    @staticmethod
    def dn(x):
        if x - x != 0.0:
            return x
        return x - (abs(x) * (2 * _EPS) + _TINY)

    @staticmethod
    def up(x):
        if x - x != 0.0:
            return x
        return x + (abs(x) * (2 * _EPS) + _TINY)

    @staticmethod
    def dn4(x):
        if x - x != 0.0:
            return x
        return x - (abs(x) * (6 * _EPS) + _TINY)

    @staticmethod
    def up4(x):
        if x - x != 0.0:
            return x
        return x + (abs(x) * (6 * _EPS) + _TINY)

    @staticmethod
    def softplus(x):
        if x > 0:
            return x + math.log1p(math.exp(-x))
        return math.log1p(math.exp(x))

    @staticmethod
    def exp(x):
        if x > 709.0:
            return math.inf if x > 709.78 else math.exp(x)
        return math.exp(x)

    @staticmethod
    def exp_lo(x):
        if x == -math.inf:
            return 0.0
        if x < -745.2:
            return 0.0
        if x > 709.78:
            return 1.7976931348623157e308
        v = math.exp(x)
        return max(0.0, v - (v * (6 * _EPS) + _TINY))

    @staticmethod
    def exp_hi(x):
        if x == -math.inf:
            return 0.0
        if x < -745.2:
            return _TINY
        if x > 709.78:
            return math.inf
        v = math.exp(x)
        return v + (v * (6 * _EPS) + _TINY)

    @staticmethod
    def log(x):
        return math.log(x)

    @staticmethod
    def isfinite(x):
        return math.isfinite(x)

    def context(self):
        return _NullContext()


class _NullContext:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


class _MpBackend:
    name = "extended"

    def __init__(self, prec: int):
        self.prec = prec
        self.inf = mpmath.inf
        self._rel = None
        self._tiny = None

    def context(self):
        return mpmath.workprec(self.prec)

    def _consts(self):
        if self._rel is None:
            with mpmath.workprec(self.prec):
                self._rel = mpmath.ldexp(mpmath.mpf(1), -(self.prec - 4))
                self._rel4 = mpmath.ldexp(mpmath.mpf(1), -(self.prec - 8))
                self._tiny = mpmath.ldexp(mpmath.mpf(1), -(10**6))
        return self._rel, self._rel4, self._tiny

    def num(self, x):
        return mpmath.mpf(x)

    def dn(self, x):
        if not mpmath.isfinite(x):
            return x
        r, _, t = self._consts()
        return x - (abs(x) * r + t)

    def up(self, x):
        if not mpmath.isfinite(x):
            return x
        r, _, t = self._consts()
        return x + (abs(x) * r + t)

    def dn4(self, x):
        if not mpmath.isfinite(x):
            return x
        _, r, t = self._consts()
        return x - (abs(x) * r + t)

    def up4(self, x):
        if not mpmath.isfinite(x):
            return x
        _, r, t = self._consts()
        return x + (abs(x) * r + t)

    @staticmethod
    def softplus(x):
        if x > 0:
            return x + mpmath.log1p(mpmath.exp(-x))
        return mpmath.log1p(mpmath.exp(x))

    @staticmethod
    def exp(x):
        return mpmath.exp(x)

    def exp_lo(self, x):
        if x == -mpmath.inf:
            return mpmath.mpf(0)
        v = mpmath.exp(x)
        return max(mpmath.mpf(0), self.dn4(v))

    def exp_hi(self, x):
        if x == -mpmath.inf:
            return mpmath.mpf(0)
        return self.up4(mpmath.exp(x))

    @staticmethod
    def log(x):
        return mpmath.log(x)

    @staticmethod
    def isfinite(x):
        return mpmath.isfinite(x)


DOUBLE = _DoubleBackend()
_MP_CACHE: dict[int, _MpBackend] = {}


def mp_backend(prec: int) -> _MpBackend:
    if prec not in _MP_CACHE:
        _MP_CACHE[prec] = _MpBackend(prec)
    return _MP_CACHE[prec]


# -- interval helpers (backend generic) ---------------------------------------


def _scale(B, k, lo, hi):
    if k == 0:
        return 0 * lo, 0 * lo
    if k > 0:
        return B.dn(k * lo), B.up(k * hi)
    return B.dn(k * hi), B.up(k * lo)


def _mul(B, alo, ahi, blo, bhi):
    ps = [alo * blo, alo * bhi, ahi * blo, ahi * bhi]
    ps = [p for p in ps if p == p]  # drop 0*inf
    if not ps:
        return -B.inf, B.inf
    return B.dn(min(ps)), B.up(max(ps))


# -- prepared forms -------------------------------------------------------------


@dataclass
class _Term:
    c: float
    a: float
    b: float
    sign: int
    crit_u: float | None  # logit of the critical point of E, if any


class PreparedForm:
    """Per-backend precomputation for a list of ``(c, a, b)`` triples."""

    def __init__(self, triples: Sequence[tuple[float, float, float]]):
        self.triples = [(float(c), float(a), float(b)) for c, a, b in triples]
        self.terms = []
        for c, a, b in self.triples:
            crit = None
            if a * b > 0:
                crit = math.log(a / b)
            self.terms.append(_Term(c, a, b, 1 if c > 0 else -1, crit))
        self._cache: dict[str, list] = {}

    def consts(self, B):
        """``(log|c| lo, log|c| hi, a, b, critical E lo, critical E hi)`` per term."""
        got = self._cache.get(B.name + str(getattr(B, "prec", "")))
        if got is not None:
            return got
        out = []
        with B.context():
            for t in self.terms:
                c, a, b = B.num(t.c), B.num(t.a), B.num(t.b)
                lc = B.log(abs(c))
                ecrit = None
                if t.crit_u is not None:
                    s = a + b
                    la, lb = B.log(a / s), B.log(b / s)
                    # the quotients a/s, b/s carry rounding error; pad generously
                    e = a * la + b * lb
                    w = (abs(a * la) + abs(b * lb)) * (64 * _EPS if B is DOUBLE else 2 ** -(B.prec - 10)) + _TINY
                    ecrit = (e - w, e + w)
                out.append((B.dn4(lc), B.up4(lc), a, b, ecrit))
        self._cache[B.name + str(getattr(B, "prec", ""))] = out
        return out


def _lam(B, u):
    """Enclosures of ``log t`` and ``log(1-t)`` at the logit ``u``."""
    sp_neg = B.softplus(-u)
    sp_pos = B.softplus(u)
    return -B.up4(sp_neg), -B.dn4(sp_neg), -B.up4(sp_pos), -B.dn4(sp_pos)


@dataclass
class Enclosure:
    flo: object
    fhi: object
    dlo: object
    dhi: object
    scale: object  # enclosures are of f * exp(-scale), f' * exp(-scale)

    def f_sign(self) -> int:
        if self.flo > 0:
            return 1
        if self.fhi < 0:
            return -1
        return 0

    def d_sign(self) -> int:
        if self.dlo > 0:
            return 1
        if self.dhi < 0:
            return -1
        return 0


def enclose(P: PreparedForm, B, ul, uh, *, with_derivative: bool = True, scale=None) -> Enclosure:
    """Enclose ``f`` and ``df/du`` over ``[ul, uh]`` in logit coordinates."""
    with B.context():
        ul, uh = B.num(ul), B.num(uh)
        A0l, A0h, A1l, A1h = _lam(B, ul)
        if uh == ul:
            B0l, B0h, B1l, B1h = A0l, A0h, A1l, A1h
        else:
            B0l, B0h, B1l, B1h = _lam(B, uh)
        consts = P.consts(B)
        if with_derivative:
            ta = (B.exp_lo(A0l), B.exp_hi(A0h))
            sa = (B.exp_lo(A1l), B.exp_hi(A1h))
            tb = (B.exp_lo(B0l), B.exp_hi(B0h))
            sb = (B.exp_lo(B1l), B.exp_hi(B1h))
        elo_list, ehi_list, g_list = [], [], []
        for term, (lclo, lchi, a, b, ecrit) in zip(P.terms, consts):
            # E at the left endpoint
            p0 = _scale(B, a, A0l, A0h)
            p1 = _scale(B, b, A1l, A1h)
            e_lo, e_hi = B.dn(p0[0] + p1[0]), B.up(p0[1] + p1[1])
            if uh != ul:
                q0 = _scale(B, a, B0l, B0h)
                q1 = _scale(B, b, B1l, B1h)
                f_lo, f_hi = B.dn(q0[0] + q1[0]), B.up(q0[1] + q1[1])
                e_lo, e_hi = min(e_lo, f_lo), max(e_hi, f_hi)
                if ecrit is not None:
                    cu = term.crit_u
                    tol = 1e-9 * (1.0 + abs(cu))
                    if ul - tol <= cu <= uh + tol:
                        e_lo, e_hi = min(e_lo, ecrit[0]), max(e_hi, ecrit[1])
            e_lo, e_hi = B.dn(e_lo + lclo), B.up(e_hi + lchi)
            elo_list.append(e_lo)
            ehi_list.append(e_hi)
            if with_derivative:
                # a (1-t) - b t is monotone in u; enclose it at both endpoints
                x = _scale(B, a, sa[0], sa[1])
                y = _scale(B, b, ta[0], ta[1])
                glo, ghi = B.dn(x[0] - y[1]), B.up(x[1] - y[0])
                if uh != ul:
                    x = _scale(B, a, sb[0], sb[1])
                    y = _scale(B, b, tb[0], tb[1])
                    glo = min(glo, B.dn(x[0] - y[1]))
                    ghi = max(ghi, B.up(x[1] - y[0]))
                g_list.append((glo, ghi))
        S = max(ehi_list) if scale is None else scale
        flo = fhi = dlo = dhi = 0 * S
        for i, term in enumerate(P.terms):
            vlo = B.exp_lo(B.dn(elo_list[i] - S))
            vhi = B.exp_hi(B.up(ehi_list[i] - S))
            if term.sign > 0:
                flo, fhi = B.dn(flo + vlo), B.up(fhi + vhi)
            else:
                flo, fhi = B.dn(flo - vhi), B.up(fhi - vlo)
            if with_derivative:
                glo, ghi = g_list[i]
                if term.sign < 0:
                    glo, ghi = -ghi, -glo
                plo, phi = _mul(B, vlo, vhi, glo, ghi)
                dlo, dhi = B.dn(dlo + plo), B.up(dhi + phi)
        if flo != flo or fhi != fhi:
            flo, fhi = -B.inf, B.inf
        if with_derivative and (dlo != dlo or dhi != dhi):
            dlo, dhi = -B.inf, B.inf
        return Enclosure(flo, fhi, dlo, dhi, S)


def point_sign(P: PreparedForm, B, u) -> tuple[int, object]:
    """Certified sign of ``f`` at ``u`` (0 if undecided) and the enclosure width ratio."""
    e = enclose(P, B, u, u, with_derivative=False)
    return e.f_sign(), e


def mean_value(P: PreparedForm, B, ul, uh) -> tuple[Enclosure, Enclosure]:
    """Natural enclosure over ``[ul, uh]`` tightened by the mean-value form.

    Returns the combined enclosure and the point enclosure at the midpoint.
    """
    nat = enclose(P, B, ul, uh)
    with B.context():
        ulb, uhb = B.num(ul), B.num(uh)
        m = ulb + (uhb - ulb) / 2
        if not (ulb <= m <= uhb):
            m = ulb
        mid = enclose(P, B, m, m, with_derivative=False, scale=nat.scale)
        r1 = B.dn(ulb - m)
        r2 = B.up(uhb - m)
        plo, phi = _mul(B, nat.dlo, nat.dhi, r1, r2)
        mlo, mhi = B.dn(mid.flo + plo), B.up(mid.fhi + phi)
        flo, fhi = max(nat.flo, mlo), min(nat.fhi, mhi)
        if flo > fhi:  # only possible through a bug; stay sound
            flo, fhi = min(nat.flo, mlo), max(nat.fhi, mhi)
    return Enclosure(flo, fhi, nat.dlo, nat.dhi, nat.scale), mid


# -- tails --------------------------------------------------------------------


def _exact_diff(a: float, b: float) -> tuple[float, float]:
    d = a - b
    if Fraction(d) == Fraction(a) - Fraction(b):
        return d, d
    return DOUBLE.dn(d), DOUBLE.up(d)


def tail_certified(triples: Sequence[tuple[float, float, float]], U: float) -> tuple[bool, int]:
    """Certify that ``f`` has no zero for ``u <= -U`` (i.e. ``0 < t <= sigmoid(-U)``).

    ``f = t^a* g`` with ``a*`` the smallest ``a``.  The tail is clear if the
    enclosure of ``g`` excludes 0, or if ``g`` is strictly monotone there and
    its value at ``-U`` has the sign of its limit at ``t -> 0`` (or the limit
    is exactly 0).  Returns ``(certified, sign of f at -U)``.
    """
    B = DOUBLE
    astar = min(a for _, a, _ in triples)
    L0l, L0h, L1l, L1h = _lam(B, -U)
    # over the tail: log t in (-inf, L0h], log(1-t) in [L1l, 0]
    t_hi = B.exp_hi(L0h)
    s_lo = B.exp_lo(L1l)
    glo = ghi = 0.0
    dlo = dhi = 0.0
    plo = phi = 0.0  # g at u = -U
    limit = []
    for c, a, b in triples:
        al, ah = _exact_diff(a, astar)
        al = max(al, 0.0)
        lc_lo, lc_hi = B.dn4(math.log(abs(c))), B.up4(math.log(abs(c)))
        sgn = 1 if c > 0 else -1
        if ah == 0.0:
            limit.append(c)
        # E = alpha*log t + b*log(1-t) over the tail
        if ah == 0.0:
            e0 = (0.0, 0.0)
        else:
            e0 = (-math.inf, B.up(al * L0h) if al > 0 else 0.0)
        e1 = _scale(B, b, L1l, 0.0)
        elo = B.dn(e0[0] + e1[0] + lc_lo)
        ehi = B.up(e0[1] + e1[1] + lc_hi)
        vlo, vhi = B.exp_lo(elo), B.exp_hi(ehi)
        if sgn > 0:
            glo, ghi = B.dn(glo + vlo), B.up(ghi + vhi)
        else:
            glo, ghi = B.dn(glo - vhi), B.up(ghi - vlo)
        # value at u = -U
        pa = _scale(B, al, L0l, L0h) if ah != 0.0 else (0.0, 0.0)
        if ah != al and ah != 0.0:
            pa2 = _scale(B, ah, L0l, L0h)
            pa = (min(pa[0], pa2[0]), max(pa[1], pa2[1]))
        pb = _scale(B, b, L1l, L1h)
        qlo, qhi = B.exp_lo(B.dn(pa[0] + pb[0] + lc_lo)), B.exp_hi(B.up(pa[1] + pb[1] + lc_hi))
        if sgn > 0:
            plo, phi = B.dn(plo + qlo), B.up(phi + qhi)
        else:
            plo, phi = B.dn(plo - qhi), B.up(phi - qlo)
        # dg/du / (t (1-t)), which has the sign of dg/du on the open tail
        if ah == 0.0:
            # c * (-b) * (1-t)^(b-1)
            if b == 0.0:
                continue
            f1 = _scale(B, b - 1.0, L1l, 0.0) if b != 1.0 else (0.0, 0.0)
            m = B.exp_lo(B.dn(f1[0] + lc_lo)), B.exp_hi(B.up(f1[1] + lc_hi))
            k = -b * sgn
            wlo, whi = _scale(B, k, m[0], m[1])
        else:
            # c t^(alpha-1) (1-t)^(b-1) (alpha (1-t) - b t)
            if al >= 1.0:
                x0 = (-math.inf, B.up((al - 1.0) * L0h) if al > 1.0 else 0.0)
                if al == 1.0 and ah == 1.0:
                    x0 = (0.0, 0.0)
            else:
                x0 = (B.dn((ah - 1.0) * L0h) if ah < 1.0 else -math.inf, math.inf)
            x1 = _scale(B, b - 1.0, L1l, 0.0)
            mlo = B.exp_lo(B.dn(x0[0] + x1[0] + lc_lo))
            mhi = B.exp_hi(B.up(x0[1] + x1[1] + lc_hi))
            flo, fhi = B.dn(al * s_lo), B.up(ah * 1.0)
            y = _scale(B, b, 0.0, t_hi)
            fac = (B.dn(flo - y[1]), B.up(fhi - y[0]))
            wlo, whi = _mul(B, mlo, mhi, fac[0], fac[1])
            if sgn < 0:
                wlo, whi = -whi, -wlo
        dlo, dhi = B.dn(dlo + wlo), B.up(dhi + whi)
    if dlo != dlo or dhi != dhi:
        dlo, dhi = -math.inf, math.inf
    at_end = 1 if plo > 0 else (-1 if phi < 0 else 0)
    if glo > 0 or ghi < 0:
        return True, (1 if glo > 0 else -1)
    if at_end == 0:
        return False, 0
    if dlo > 0 or dhi < 0:
        lim = math.fsum(limit)
        if lim == 0.0 or (lim > 0) == (at_end > 0):
            return True, at_end
    return False, at_end


def mirror(triples):
    """Triples of ``f(1 - t)``; logit ``u`` maps to ``-u``."""
    return [(c, b, a) for c, a, b in triples]


# -- the bisection driver -----------------------------------------------------

_SPLIT_FRACTIONS = (0.5, 0.4375, 0.5625, 0.3125, 0.6875)


@dataclass
class RawRoot:
    ul: float
    uh: float
    unique: bool
    trace: tuple[str, ...]
    extended: bool = False
    tail: bool = False


@dataclass
class RawResult:
    roots: list[RawRoot]
    complete: bool
    subdivisions: int = 0
    escalations: int = 0
    tails: tuple[float, float] = (0.0, 0.0)
    notes: list[str] = field(default_factory=list)


def _split_points(ul: float, uh: float):
    lo_mag = min(abs(ul), abs(uh))
    geometric = ul * uh > 0 and lo_mag >= 1.0 and max(abs(ul), abs(uh)) > 8.0 * lo_mag
    for frac in _SPLIT_FRACTIONS:
        if geometric:
            la, lb = math.log(abs(ul)), math.log(abs(uh))
            s = math.copysign(math.exp(la + frac * (lb - la)), ul)
        else:
            s = ul + frac * (uh - ul)
        if ul < s < uh:
            yield s


class Isolator:
    """Adaptive bisection on the logit line with certified tails."""

    def __init__(self, triples, cfg):
        from .config import PrecisionPolicy

        self.triples = [tuple(map(float, t)) for t in triples]
        self.cfg = cfg
        self.P = PreparedForm(self.triples)
        self.ext_backend = mp_backend(cfg.extended_prec)
        self.policy = cfg.precision_policy
        self.auto = self.policy is PrecisionPolicy.AUTO
        self.start_ext = self.policy is PrecisionPolicy.EXTENDED
        self.escalations = 0

    # signs -------------------------------------------------------------
    def sign_at(self, u: float, ext: bool = False) -> int:
        B = self.ext_backend if ext or self.start_ext else DOUBLE
        s = enclose(self.P, B, u, u, with_derivative=False).f_sign()
        if s == 0 and B is DOUBLE and self.auto:
            self.escalations += 1
            s = enclose(self.P, self.ext_backend, u, u, with_derivative=False).f_sign()
        return s

    def _tail(self, triples, start: float = 16.0):
        U = start
        last = 0
        while U < 1e300:
            ok, s = tail_certified(triples, U)
            if ok:
                return U, s, True
            last = s
            U *= 2.0
            if U > 1e6 and last == 0:
                # the tail itself never becomes decidable; no point continuing
                break
        return min(U, 1e300), last, False

    def run(self) -> RawResult:
        cfg = self.cfg
        roots: list[RawRoot] = []
        complete = True
        notes = []
        UL, sL, okL = self._tail(self.triples)
        UR, sR, okR = self._tail(mirror(self.triples))
        if not okL:
            complete = False
            roots.append(RawRoot(-math.inf, -UL, False, ("left tail not certified",), tail=True))
        if not okR:
            complete = False
            roots.append(RawRoot(UR, math.inf, False, ("right tail not certified",), tail=True))
        ul, uh = -UL, UR
        if sL == 0:
            ul, sL = self._nudge(ul, -1.0)
        if sR == 0:
            uh, sR = self._nudge(uh, +1.0)
        if sL == 0 or sR == 0:
            roots.append(RawRoot(ul, uh, False, ("endpoint sign undecided",)))
            return RawResult(roots, False, 0, self.escalations, (UL, UR), ["endpoint sign undecided"])
        stack = [(ul, uh, sL, sR, self.start_ext)]
        nsub = 0
        min_w = cfg.min_width
        while stack:
            a, b, sa, sb, ext = stack.pop()
            B = self.ext_backend if ext else DOUBLE
            enc, mid = mean_value(self.P, B, a, b)
            if enc.f_sign() != 0:
                continue
            if enc.d_sign() != 0:
                if sa != sb:
                    roots.append(
                        RawRoot(a, b, True, ("endpoint signs differ", "derivative enclosure excludes 0"), ext)
                    )
                continue
            scale = max(1.0, abs(a), abs(b))
            w = b - a
            if not ext and self.auto:
                fw = enc.fhi - enc.flo
                noisy = (mid.fhi - mid.flo) >= 0.25 * fw
                if noisy or w <= 64.0 * min_w * scale:
                    self.escalations += 1
                    stack.append((a, b, sa, sb, True))
                    continue
            if w <= min_w * scale:
                roots.append(RawRoot(a, b, False, ("width below min_width",), ext))
                continue
            if nsub >= cfg.max_subdivisions:
                complete = False
                roots.append(RawRoot(a, b, False, ("subdivision limit reached",), ext))
                continue
            split = None
            for s in _split_points(a, b):
                ss = enclose(self.P, B, s, s, with_derivative=False).f_sign()
                if ss != 0:
                    split = (s, ss)
                    break
            if split is None:
                if not ext and self.auto:
                    self.escalations += 1
                    stack.append((a, b, sa, sb, True))
                else:
                    roots.append(RawRoot(a, b, False, ("no decidable split point",), ext))
                continue
            nsub += 1
            s, ss = split
            stack.append((s, b, ss, sb, ext))
            stack.append((a, s, sa, ss, ext))
        roots.sort(key=lambda r: r.ul)
        roots = self._merge_unresolved(roots)
        if any(not r.unique for r in roots):
            complete = False
        roots = [self._refine(r) if r.unique else r for r in roots]
        return RawResult(roots, complete, nsub, self.escalations, (UL, UR), notes)

    def _nudge(self, u: float, direction: float):
        for _ in range(20):
            s = self.sign_at(u)
            if s != 0:
                return u, s
            u = u + direction * max(1.0, abs(u)) * 1e-3
        return u, 0

    @staticmethod
    def _merge_unresolved(roots: list[RawRoot]) -> list[RawRoot]:
        out: list[RawRoot] = []
        for r in roots:
            if out and not r.unique and not out[-1].unique and not r.tail and not out[-1].tail and out[-1].uh >= r.ul:
                prev = out[-1]
                out[-1] = RawRoot(prev.ul, max(prev.uh, r.uh), False, prev.trace, prev.extended or r.extended)
            else:
                out.append(r)
        return out

    def _refine(self, r: RawRoot) -> RawRoot:
        a, b = r.ul, r.uh
        sa = self.sign_at(a, r.extended)
        target = self.cfg.refine_width
        for _ in range(400):
            if b - a <= target * max(1.0, abs(a), abs(b)):
                break
            m = a + 0.5 * (b - a)
            if not a < m < b:
                break
            sm = self.sign_at(m, r.extended)
            if sm == 0:
                break
            if sm == sa:
                a = m
            else:
                b = m
        return RawRoot(a, b, True, r.trace, r.extended)


def isolate_triples(triples, cfg) -> RawResult:
    return Isolator(triples, cfg).run()


def refine_interval(triples, ul: float, uh: float, width: float, cfg, extended: bool = False):
    """Shrink a sign-change interval in logit coordinates to relative ``width``."""
    iso = Isolator(triples, cfg.with_(refine_width=width))
    r = iso._refine(RawRoot(ul, uh, True, (), extended))
    return r.ul, r.uh


def log_coords(ul: float, uh: float) -> tuple[tuple[float, float], tuple[float, float]]:
    """Enclosures of ``log t`` and ``log(1-t)`` for ``u`` in ``[ul, uh]``."""
    B = DOUBLE
    if ul == -math.inf:
        l0lo, l1hi = -math.inf, 0.0
    else:
        l0lo, _, _, l1hi = _lam(B, ul)
    if uh == math.inf:
        l0hi, l1lo = 0.0, -math.inf
    else:
        _, l0hi, l1lo, _ = _lam(B, uh)
    return (l0lo, min(l0hi, 0.0)), (l1lo, min(l1hi, 0.0))
