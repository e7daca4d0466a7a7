"""Acceptance criteria 1-8, each at its stated tolerance.

The per-criterion PASS/FAIL lines are printed by conftest.py at the end of
the run.
"""
import math
import time

import mpmath
import numpy as np
import pytest

from conftest import P, S
from fewnomials import (
    Status,
    evaluate_exact,
    evaluate_interval,
    khovanski_bound,
    pyramidal_bound,
    solve_pyramidal,
    solve_trinomial_pair,
    trinomial_m_bound,
)
from fewnomials.bounds import polygon_class_bound
from fewnomials.solver import degenerate_octant_system, product_system
from fewnomials.univariate import (
    RealExpPoly,
    TOneMinusTForm,
    descartes_bound,
    isolate_positive_roots,
    isolate_roots,
    reduce_pair,
    rolle_root_bound,
)

# -- 1 -----------------------------------------------------------------------


@pytest.mark.criterion(1)
def test_haas_five_roots(haas):
    t0 = time.perf_counter()
    rep = solve_trinomial_pair(haas)
    elapsed = time.perf_counter() - t0
    assert rep.count_range == (5, 5)
    assert rep.status == "COMPLETE"
    assert elapsed < 30.0


@pytest.mark.criterion(1)
def test_haas_roots_confirmed_by_newton(haas):
    # independent check: 50-digit Newton from each box centre stays in the box
    rep = solve_trinomial_pair(haas)
    mpmath.mp.dps = 50
    try:
        f = lambda x, y: x**108 + mpmath.mpf("1.1") * y**54 - mpmath.mpf("1.1") * y
        g = lambda x, y: y**108 + mpmath.mpf("1.1") * x**54 - mpmath.mpf("1.1") * x
        for c in rep.unique:
            x, y = mpmath.findroot([f, g], c.box.mid)
            assert c.box.inflate(0.0, 1e-12).contains((float(x), float(y)))
    finally:
        mpmath.mp.dps = 15


# -- 2 -----------------------------------------------------------------------

UNIVARIATE = TOneMinusTForm.of((-1.12, 0.5, 0.02), (-0.71, -0.05, 1.8))
REFERENCE_TRUE = [0.00396494, 0.72522344, 0.99620026]
REFERENCE_OFF = [0.02986317, 0.4354707]


def _scan_roots(form, n=200_001):
    """Sign changes of ``form`` on a logit grid, polished with mpmath bisection."""
    mpmath.mp.dps = 40
    try:
        def f(t):
            t = mpmath.mpf(t)
            return 1 - mpmath.mpf("1.12") * t**0.5 * (1 - t) ** mpmath.mpf("0.02") - mpmath.mpf(
                "0.71"
            ) * t ** mpmath.mpf("-0.05") * (1 - t) ** mpmath.mpf("1.8")

        u = np.linspace(-12, 12, n)
        t = 1 / (1 + np.exp(-u))
        v = np.array([form(x) for x in t])
        out = []
        for i in np.nonzero(np.sign(v[1:]) != np.sign(v[:-1]))[0]:
            out.append(float(mpmath.findroot(f, (t[i], t[i + 1]), solver="anderson")))
        return out
    finally:
        mpmath.mp.dps = 15


@pytest.mark.criterion(2)
def test_univariate_count_and_runtime():
    t0 = time.perf_counter()
    res = isolate_roots(UNIVARIATE)
    assert time.perf_counter() - t0 < 5.0
    assert res.count_range == (5, 5)
    assert res.complete


@pytest.mark.criterion(2)
def test_univariate_roots_match_independent_scan():
    res = isolate_roots(UNIVARIATE)
    scan = _scan_roots(UNIVARIATE)
    assert len(scan) == 5
    for cert, r in zip(res.unique, sorted(scan)):
        assert cert.box.inflate(0.0, 1e-12).contains((r,))


@pytest.mark.criterion(2)
@pytest.mark.parametrize("r", REFERENCE_TRUE)
def test_univariate_reference_values_that_are_roots(r):
    res = isolate_roots(UNIVARIATE)
    assert min(abs(m - r) for m in res.roots) <= 1e-5


@pytest.mark.criterion(2)
@pytest.mark.xfail(strict=True, reason="reference value is not a root; see notes/decisions.md")
@pytest.mark.parametrize("r", REFERENCE_OFF)
def test_univariate_reference_values_that_are_not_roots(r):
    res = isolate_roots(UNIVARIATE)
    assert min(abs(m - r) for m in res.roots) <= 1e-5


# -- 3 -----------------------------------------------------------------------

S5, S3 = math.sqrt(5.0), math.sqrt(3.0)
POLY_FIXTURES = [
    (
        S(P((1, (2, 0)), (1, (0, 2)), (-25, (0, 0))), P((1, (1, 0)), (1, (0, 1)), (-7, (0, 0)))),
        "TRIANGLE",
        [(3.0, 4.0), (4.0, 3.0)],
    ),
    (
        S(P((1, (2, 0)), (-3, (1, 0)), (2, (0, 0))), P((1, (0, 2)), (-3, (0, 1)), (2, (0, 0)))),
        "QUADRILATERAL",
        [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0), (2.0, 2.0)],
    ),
    (
        S(P((1, (0, 2)), (-7, (0, 1)), (12, (0, 0))), P((-1, (0, 0)), (1, (1, 1)), (-1, (2, 0)))),
        "PENTAGON",
        # (x1, x2): x2 solves x2^2 - 7x2 + 12 = 0, then x1^2 - x2 x1 + 1 = 0
        [((3 - S5) / 2, 3.0), ((3 + S5) / 2, 3.0), (2 - S3, 4.0), (2 + S3, 4.0)],
    ),
]


@pytest.mark.criterion(3)
@pytest.mark.parametrize("F,cls,roots", POLY_FIXTURES, ids=["triangle", "quadrilateral", "pentagon"])
def test_polygon_class_fixture(F, cls, roots):
    rep = solve_trinomial_pair(F)
    assert rep.classification.name == cls
    assert rep.provenance.value == "COR_POLY"
    assert rep.count_range == (len(roots), len(roots))
    assert rep.complete
    for r in roots:
        near = [c for c in rep.unique if c.box.inflate(0.0, 1e-8).contains(r)]
        assert len(near) == 1, r
        assert max(abs(a - b) for a, b in zip(near[0].box.mid, r)) <= 1e-8


# -- 4 -----------------------------------------------------------------------


@pytest.mark.criterion(4)
def test_bound_table():
    assert [khovanski_bound(2, mu) for mu in (5, 6, 7)] == [248832, 23887872, 4586471424]
    assert trinomial_m_bound(3, 4, 5) == (5, 14, 30)
    assert pyramidal_bound(2, 2, 21) == 20


# -- 5 -----------------------------------------------------------------------


@pytest.mark.criterion(5)
def test_degenerate_octant_exact():
    F = degenerate_octant_system()
    assert F.type == (2, 2, 21)
    pts = [(i, j, 1) for i in range(1, 6) for j in range(1, 6)]
    assert len(pts) == 25
    for p in pts:
        assert [evaluate_exact(f, p) for f in F] == [0, 0, 0]


# -- 6 -----------------------------------------------------------------------

_W = np.sinh(np.linspace(-8.0, 8.0, 10**6)) * 4.0  # logit grid, dense near the middle
_L0 = -np.logaddexp(0.0, -_W)  # log t
_L1 = -np.logaddexp(0.0, _W)  # log(1 - t)


def sampling_oracle(form: TOneMinusTForm) -> int:
    """Sign changes of ``form`` over 10^6 logit samples, evaluated max-scaled in log space."""
    cs = np.array([form.constant] + [c for c, _, _ in form.terms])
    Z = np.array([np.zeros_like(_W)] + [a * _L0 + b * _L1 for _, a, b in form.terms])
    Z -= Z.max(axis=0)
    s = np.sign(cs @ np.exp(Z))
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _random_trinomial(rng):
    e = rng.uniform(-3, 3, size=(3, 2))
    c = rng.normal(size=3)
    return P(*[(c[i], tuple(e[i])) for i in range(3)])


@pytest.mark.slow
@pytest.mark.criterion(6)
def test_random_trinomial_pairs():
    rng = np.random.default_rng(20261015)
    violations, complete = [], 0
    for k in range(10_000):
        F = S(_random_trinomial(rng), _random_trinomial(rng))
        rep = solve_trinomial_pair(F)
        lo, _ = rep.count_range
        if lo > 5:
            violations.append((k, "a", lo))
        if lo > polygon_class_bound(rep.classification):
            violations.append((k, "b", lo, rep.classification))
        for c in rep.unique:
            if not all(evaluate_interval(f, c.box).contains_zero() for f in F):
                violations.append((k, "c", c.box))
        if rep.complete and rep.canonical is not None and rep.univariate is not None:
            complete += 1
            o = sampling_oracle(reduce_pair(rep.canonical))
            if o != lo:
                violations.append((k, "d", lo, o))
    assert complete > 5000  # pairs settled before the univariate stage get (a)-(c) only
    assert violations == []


# -- 7 -----------------------------------------------------------------------


@pytest.mark.slow
@pytest.mark.criterion(7)
def test_sign_rule_soundness():
    rng = np.random.default_rng(7)
    violations = []
    for k in range(10_000):
        m = int(rng.integers(2, 7))
        p = RealExpPoly(tuple((float(rng.normal()), float(rng.uniform(-5, 5))) for _ in range(m)))
        res = isolate_positive_roots(p)
        if res.count_range[0] > descartes_bound(p):
            violations.append(k)
    assert violations == []


@pytest.mark.slow
@pytest.mark.criterion(7)
def test_rolle_soundness():
    rng = np.random.default_rng(8)
    violations = []
    for k in range(10_000):
        m = int(rng.integers(1, 5))
        form = TOneMinusTForm(
            tuple((float(rng.normal()), float(rng.uniform(-3, 3)), float(rng.uniform(-3, 3))) for _ in range(m))
        )
        res = isolate_roots(form)
        if res.count_range[0] > rolle_root_bound(form):
            violations.append(k)
    assert violations == []


# -- 8 -----------------------------------------------------------------------


@pytest.mark.criterion(8)
@pytest.mark.parametrize("n,expected", [(2, 4), (3, 8)])
def test_product_systems(n, expected):
    res = solve_pyramidal(product_system(n))
    assert res.count_range == (expected, expected)
    assert all(c.status is Status.UNIQUE_NONDEGENERATE for c in res.certificates)
    mids = sorted(tuple(round(v) for v in c.box.mid) for c in res.unique)
    assert len(set(mids)) == expected
    assert all(v in (1, 2) for m in mids for v in m)
