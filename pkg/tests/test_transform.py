import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from conftest import P, S
from fewnomials import MonomialMap, canonicalize_pair, evaluate
from fewnomials.transform import (
    DegenerateNewtonError,
    IllConditionedMapError,
    SignObstructionError,
    SingularMapError,
    apply_monomial_map,
    exact_inverse,
    normalize_constant,
)

small = st.integers(-3, 3)
coeff = st.floats(0.2, 5.0)
sign = st.sampled_from([-1.0, 1.0])


def test_exact_inverse_integer_matrix():
    inv = exact_inverse([[2, 1], [1, 1]])
    assert inv == [[1.0, -1.0], [-1.0, 2.0]]
    assert exact_inverse([[3, 0], [0, 3]])[0][0] == 1 / 3
    with pytest.raises(SingularMapError):
        exact_inverse([[1, 2], [2, 4]])


def test_map_inverse_round_trip():
    M = MonomialMap.from_scaling(((2, 1), (1, 3)), (0.5, 4.0))
    y = (1.3, 0.7)
    x = M.map_point(y)
    back = M.inverse().map_point(x)
    assert back == pytest.approx(y, rel=1e-14)
    I = M.compose(M.inverse())
    assert np.allclose(I.matrix, np.eye(2)) and np.allclose(I.log_scale, 0, atol=1e-15)


def test_singular_map_rejected():
    M = MonomialMap(((1, 2), (2, 4)), (0.0, 0.0))
    with pytest.raises(SingularMapError):
        apply_monomial_map(P((1, (1, 0))), M)


@given(
    st.lists(st.tuples(st.floats(-3, 3).filter(lambda c: abs(c) > 0.01), small, small), min_size=1, max_size=5),
    st.tuples(small, small, small, small),
    st.tuples(st.floats(-1, 1), st.floats(-1, 1)),
    st.tuples(st.floats(0.2, 3), st.floats(0.2, 3)),
)
def test_apply_map_preserves_values(terms, A, logs, y):
    mat = ((A[0], A[1]), (A[2], A[3]))
    assume(abs(A[0] * A[3] - A[1] * A[2]) >= 1)
    f = P(*[(c, (a, b)) for c, a, b in terms])
    M = MonomialMap(mat, logs)
    g = apply_monomial_map(f, M)
    x = M.map_point(y)
    scale = sum(abs(t.coeff) * x[0] ** t.exponent[0] * x[1] ** t.exponent[1] for t in f)
    assert abs(evaluate(g, y) - evaluate(f, x)) <= 1e-12 * max(scale, 1e-300)


def test_normalize_constant():
    f = P((2, (1, 1)), (-4, (2, 0)), (6, (0, 3)))
    g = normalize_constant(f)
    assert g.coefficient((0, 0)) == 1.0


@st.composite
def trinomial_pairs(draw):
    pts = draw(st.lists(st.tuples(small, small), min_size=6, max_size=6, unique=True))
    signs = [draw(sign) for _ in range(6)]
    cs = [draw(coeff) for _ in range(6)]
    f1 = P(*[(s * c, e) for s, c, e in zip(signs[:3], cs[:3], pts[:3])])
    f2 = P(*[(s * c, e) for s, c, e in zip(signs[3:], cs[3:], pts[3:])])
    return S(f1, f2)


def _det(f):
    (a, b), (c, d), (e, g) = f.support
    return (c - a) * (g - b) - (d - b) * (e - a)


@given(trinomial_pairs(), st.floats(0.05, 0.95))
def test_canonical_first_equation_and_backmap(F, t):
    f1 = F[0]
    assume(_det(f1) != 0 and len({c > 0 for c in f1.coeffs}) == 2)
    cp = canonicalize_pair(F)
    assert cp.f1 == P((1, (0, 0)), (-1, (1, 0)), (-1, (0, 1)))
    # a point on y1 + y2 = 1 maps onto the zero set of the original f1
    x = cp.backmap.map_point((t, 1 - t))
    scale = sum(abs(tt.coeff) * x[0] ** tt.exponent[0] * x[1] ** tt.exponent[1] for tt in f1)
    assert abs(evaluate(f1, x)) <= 1e-11 * scale


@given(trinomial_pairs(), st.lists(st.tuples(st.floats(0.3, 3), st.floats(0.3, 3)), min_size=4, max_size=4))
def test_canonical_second_equation_is_a_monomial_multiple(F, ys):
    # f2(backmap(y)) / g(y) must be c * y^e; its log is affine in log y
    assume(_det(F[0]) != 0 and len({c > 0 for c in F[0].coeffs}) == 2)
    cp = canonicalize_pair(F)
    vals = []
    for y in ys:
        a = evaluate(F[1], cp.backmap.map_point(y))
        b = evaluate(cp.f2, y)
        assume(abs(b) > 1e-6 and a != 0.0)
        vals.append((math.log(y[0]), math.log(y[1]), math.log(abs(a / b)), a / b > 0))
    assert len({v[3] for v in vals}) == 1
    X = np.array([[1.0, u, v] for u, v, _, _ in vals[:3]])
    assume(abs(np.linalg.det(X)) > 1e-2)
    coef = np.linalg.solve(X, [w for _, _, w, _ in vals[:3]])
    u, v, w, _ = vals[3]
    assert coef @ [1.0, u, v] == pytest.approx(w, abs=1e-7 * (1 + abs(w)))


def test_canonicalize_errors():
    with pytest.raises(DegenerateNewtonError):
        canonicalize_pair(S(P((1, (1, 0)), (-1, (0, 0))), P((1, (0, 1)), (-1, (0, 0)))))
    with pytest.raises(DegenerateNewtonError):
        canonicalize_pair(S(P((1, (1, 1)), (-1, (2, 2)), (1, (0, 0))), P((1, (0, 1)), (-1, (0, 0)))))
    with pytest.raises(SignObstructionError):
        canonicalize_pair(S(P((1, (1, 0)), (1, (0, 1)), (1, (0, 0))), P((1, (0, 1)), (-1, (0, 0)))))


def test_nearly_collinear_map_is_flagged():
    # inverse exponent matrix has entries ~1e7, so the mapped coefficients overflow
    f1 = P((1, (0, 0)), (-2, (1, 0)), (-3, (1, 1e-7)))
    f2 = P((1, (0, 0)), (2, (3, 1)), (-5, (0, 2)))
    with pytest.raises(IllConditionedMapError) as err:
        canonicalize_pair(S(f1, f2))
    assert err.value.kind == "ILL_CONDITIONED"
