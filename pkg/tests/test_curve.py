import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import P
from fewnomials import DimensionError, PolygonClass, evaluate
from fewnomials.curve import (
    FeatureKind,
    HomogeneousForm,
    curvature_numerator,
    curvature_system,
    feature_bound,
    implicit_curvature,
    trinomial_curvature_cubic,
    trinomial_inflection_condition,
)

X1, X2 = sympy.symbols("x1 x2", positive=True)
S1, S2 = sympy.symbols("S1 S2")


def _sym_q(expr):
    f1, f2 = sympy.diff(expr, X1), sympy.diff(expr, X2)
    return sympy.diff(expr, X1, 2) * f2**2 - 2 * sympy.diff(expr, X1, X2) * f1 * f2 + sympy.diff(expr, X2, 2) * f1**2


def test_circle_and_line():
    circle = P((1, (2, 0)), (1, (0, 2)), (-1, (0, 0)))
    assert curvature_numerator(circle) == P((8, (2, 0)), (8, (0, 2)))
    line = P((1, (1, 0)), (1, (0, 1)), (-1, (0, 0)))
    assert curvature_numerator(line).is_zero()


def test_requires_plane_curve():
    with pytest.raises(DimensionError):
        curvature_numerator(P((1, (1, 0, 0)), n=3))


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(-4, 4).filter(bool), st.integers(-2, 3), st.integers(-2, 3)),
        min_size=2, max_size=4,
    ),
    st.tuples(st.floats(0.3, 3), st.floats(0.3, 3)),
)
def test_curvature_numerator_matches_sympy(terms, x):
    f = P(*[(c, (a, b)) for c, a, b in terms])
    expr = sum(sympy.Integer(c) * X1**a * X2**b for c, a, b in terms)
    q = curvature_numerator(f, normalize=False)
    ref = float(_sym_q(expr).subs({X1: x[0], X2: x[1]}))
    assert evaluate(q, x) == pytest.approx(ref, rel=1e-9, abs=1e-9)


def test_trinomial_cubic_matches_sympy():
    a, b, c, d = 0.7, -1.3, 2.1, 0.4
    A_, B_ = sympy.symbols("A B", positive=True)
    expr = 1 + A_ * X1**a * X2**b + B_ * X1**c * X2**d
    q = sympy.expand(X1**2 * X2**2 * _sym_q(expr))
    cubic = trinomial_curvature_cubic(a, b, c, d)
    pt = {X1: 1.3, X2: 0.6, A_: 0.8, B_: 1.7}
    s1 = float((A_ * X1**a * X2**b).subs(pt))
    s2 = float((B_ * X1**c * X2**d).subs(pt))
    assert cubic(s1, s2) == pytest.approx(float(q.subs(pt)), rel=1e-10)


def test_inflection_conditions_divide_the_cubic():
    def cubic(a_, b_, c_, d_):
        co = trinomial_curvature_cubic(a_, b_, c_, d_).coeffs
        return sum(k * S1 ** (3 - i) * S2**i for i, k in enumerate(co))

    for av, dv in ((2.0, 3.0), (0.5, 1.7), (3.0, 0.25)):
        cond = trinomial_inflection_condition(av, 0, 0, dv, PolygonClass.QUADRILATERAL)
        lin = cond.coeffs[0] * S1 + cond.coeffs[1] * S2
        _, rem = sympy.div(sympy.expand(cubic(av, 0, 0, dv)), lin, S1, S2)
        assert abs(float(sympy.Poly(rem, S1, S2).max_norm() if rem != 0 else 0)) < 1e-9
    for av, cv, dv in ((2.0, 1.0, 3.0), (0.5, 2.5, 1.5)):
        cond = trinomial_inflection_condition(av, 0, cv, dv, PolygonClass.PENTAGON)
        quad = sum(k * S1 ** (2 - i) * S2**i for i, k in enumerate(cond.coeffs))
        _, rem = sympy.div(sympy.expand(cubic(av, 0, cv, dv)), quad, S1, S2)
        assert abs(float(sympy.Poly(rem, S1, S2).max_norm() if rem != 0 else 0)) < 1e-9
    cond = trinomial_inflection_condition(2, 0, 0, 2, PolygonClass.TRIANGLE)
    assert cond.coeffs == (1.0, 1.0)


def test_inflection_condition_checks_normal_form():
    with pytest.raises(ValueError):
        trinomial_inflection_condition(1, 1, 0, 1, PolygonClass.QUADRILATERAL)
    with pytest.raises(ValueError):
        trinomial_inflection_condition(1, 0, 0, 2, PolygonClass.TRIANGLE)
    with pytest.raises(ValueError):
        trinomial_inflection_condition(1, 0, 1, 1, PolygonClass.HEXAGON_OR_MORE)


def test_homogeneous_form_algebra():
    h = HomogeneousForm((1.0, -2.0))
    assert h.degree == 1
    assert h(3.0, 1.0) == 1.0
    assert h.times_linear(1.0, 1.0).coeffs == (1.0, -1.0, -2.0)
    assert h.scaled(2).coeffs == (2.0, -4.0)


def test_feature_bounds():
    assert feature_bound(FeatureKind.INFLECTION, 3).value == 3
    assert feature_bound("VERTICAL_TANGENCY", 3).value == 1
    assert feature_bound(FeatureKind.INFLECTION, 2).value == 0
    assert feature_bound(FeatureKind.INFLECTION, 5).value is None
    assert feature_bound(FeatureKind.SINGULAR, 4).value > 0
    with pytest.raises(ValueError):
        feature_bound(FeatureKind.SINGULAR, 0)


def test_implicit_curvature_sign_and_system():
    circle = P((1, (2, 0)), (1, (0, 2)), (-1, (0, 0)))
    assert implicit_curvature(circle, (0.6, 0.8)) > 0
    cs = curvature_system(circle)
    f, q = cs((0.6, 0.8))
    assert f == pytest.approx(0.0, abs=1e-15) and q > 0
