import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import P, S
from fewnomials import (
    Box,
    DimensionError,
    DomainError,
    Fewnomial,
    FewnomialSystem,
    RootCertificate,
    Status,
    Term,
    evaluate,
    evaluate_exact,
    evaluate_interval,
    interval_jacobian_nonsingular,
    krawczyk_certify,
)
from fewnomials.core import derivative, partial

coeff = st.floats(-10, 10).filter(lambda c: abs(c) > 1e-3)
expo = st.floats(-3, 3)


@st.composite
def fewnomials(draw, n=2, max_terms=5):
    k = draw(st.integers(1, max_terms))
    return Fewnomial.from_pairs(n, [(draw(coeff), tuple(draw(expo) for _ in range(n))) for _ in range(k)])


points = st.tuples(st.floats(0.1, 5), st.floats(0.1, 5))


def test_terms_merge_and_sort():
    f = P((1, (1, 0)), (2, (0, 1)), (3, (1, 0)))
    assert f.m == 2
    assert f.coefficient((1, 0)) == 4
    assert P((1, (0, 1)), (1, (1, 0))) == P((1, (1, 0)), (1, (0, 1)))


def test_cancelling_terms_drop():
    f = P((1, (1, 1)), (-1, (1, 1)), (2, (0, 0)))
    assert f.m == 1
    assert (f - f).is_zero()


def test_term_validation():
    with pytest.raises(ValueError):
        Term(0.0, (1.0,))
    with pytest.raises(ValueError):
        Term(1.0, (math.inf,))
    with pytest.raises(DimensionError):
        Fewnomial(2, (Term(1.0, (1.0,)),))
    with pytest.raises(ValueError):
        Fewnomial(0)


def test_negative_zero_exponent_folded():
    assert P((1, (-0.0, 1))) == P((1, (0.0, 1)))


def test_system_shape():
    F = S(P((1, (1, 0)), (-1, (0, 0))), P((1, (0, 1)), (1, (1, 1)), (-2, (0, 0))))
    assert F.type == (2, 3) and F.k == 2 and F.is_square()
    with pytest.raises(DimensionError):
        FewnomialSystem.of(P((1, (1, 0))), Fewnomial.from_pairs(1, [(1, (1,))]))


def test_evaluate_domain():
    f = P((1, (0.5, 0)))
    with pytest.raises(DomainError):
        evaluate(f, (0.0, 1.0))
    with pytest.raises(DimensionError):
        evaluate(f, (1.0,))


def test_evaluate_overflow_flag():
    f = P((1, (1000, 0)), (-1, (0, 0)))
    v, over = evaluate(f, (10.0, 1.0), full_output=True)
    assert over and v == math.inf


def test_evaluate_exact():
    f = P((1, (2, 0)), (-3, (1, 0)), (2, (0, 0)))
    assert evaluate_exact(f, (2, 5)) == 0
    assert evaluate_exact(f, (Fraction(1, 2), 1)) == Fraction(3, 4)
    with pytest.raises(ValueError):
        evaluate_exact(P((1, (0.5, 0))), (1, 1))


@given(fewnomials(), points)
def test_evaluate_matches_sympy(f, x):
    X1, X2 = sympy.symbols("x1 x2", positive=True)
    expr = sum(sympy.Float(t.coeff, 30) * X1 ** sympy.Float(t.exponent[0], 30) * X2 ** sympy.Float(t.exponent[1], 30) for t in f)
    ref = float(expr.subs({X1: sympy.Float(x[0], 30), X2: sympy.Float(x[1], 30)}).evalf(30))
    scale = sum(abs(t.coeff) * x[0] ** t.exponent[0] * x[1] ** t.exponent[1] for t in f)
    assert abs(evaluate(f, x) - ref) <= 1e-13 * scale


@given(fewnomials(), points, st.floats(0.0, 0.05))
def test_interval_evaluation_encloses(f, x, r):
    b = Box.from_bounds([(x[0], x[0] * (1 + r)), (x[1], x[1] * (1 + r))])
    I = evaluate_interval(f, b)
    assert evaluate(f, x) in I
    assert evaluate(f, b.mid) in I


@settings(max_examples=50)
@given(fewnomials(), points)
def test_derivative_matches_finite_difference(f, x):
    h = 1e-6
    for i in (1, 2):
        xp = list(x)
        xm = list(x)
        xp[i - 1] *= 1 + h
        xm[i - 1] *= 1 - h
        fd = (evaluate(f, xp) - evaluate(f, xm)) / (2 * h * x[i - 1])
        scale = sum(abs(t.coeff * t.exponent[i - 1]) * x[0] ** t.exponent[0] * x[1] ** t.exponent[1] for t in f) / x[i - 1]
        mag = sum(abs(t.coeff) * x[0] ** t.exponent[0] * x[1] ** t.exponent[1] for t in f) / x[i - 1]
        # truncation ~ h^2, rounding ~ eps / h
        assert abs(evaluate(derivative(f, i), x) - fd) <= 1e-5 * scale + 1e-9 * mag
        # x_i * df/dx_i
        assert evaluate(partial(f, i), x) == pytest.approx(x[i - 1] * evaluate(derivative(f, i), x), rel=1e-12, abs=1e-12 * scale)


def test_algebra():
    x = P((1, (1, 0)))
    y = P((1, (0, 1)))
    f = (x - 1) * (y - 2)
    assert f.m == 4
    assert evaluate(f, (1.0, 7.0)) == 0.0
    assert (2 * f).coefficient((0, 0)) == 4
    assert f.shift((1, 1)).coefficient((1, 1)) == 2


def test_root_certificate_needs_trace():
    b = Box.from_bounds([(1, 2)])
    with pytest.raises(ValueError):
        RootCertificate(b, Status.UNIQUE_NONDEGENERATE)
    c = RootCertificate(b, Status.SIGN_CHANGE_ONLY)
    assert not c.is_unique and c.mid == (1.5,)


def test_krawczyk_and_jacobian():
    F = S(P((1, (1, 0)), (-2, (0, 0))), P((1, (0, 1)), (-3, (0, 0))))
    good = Box.from_bounds([(1.9, 2.1), (2.9, 3.1)])
    assert krawczyk_certify(F, good)
    assert interval_jacobian_nonsingular(F, good)
    away = Box.from_bounds([(5.0, 6.0), (2.9, 3.1)])
    assert not krawczyk_certify(F, away)


def test_krawczyk_rejects_double_root():
    F = S(P((1, (2, 0)), (-2, (1, 0)), (1, (0, 0))), P((1, (0, 1)), (-1, (0, 0))))
    assert not krawczyk_certify(F, Box.from_bounds([(0.9, 1.1), (0.9, 1.1)]))
