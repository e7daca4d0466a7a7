import math

import pytest
from hypothesis import given, strategies as st

from fewnomials.interval import Box, IntervalR, down, isum, up

finite = st.floats(-1e6, 1e6, allow_nan=False)
positive = st.floats(1e-6, 1e6)


@st.composite
def intervals(draw, elems=finite):
    a, b = draw(elems), draw(elems)
    return IntervalR(min(a, b), max(a, b))


def _pick(draw, I):
    return draw(st.floats(I.lo, I.hi)) if I.lo < I.hi else I.lo


def test_down_up_bracket():
    for x in (0.1, 1.0, -3.5, 1e300, 5e-324):
        assert down(x) < x < up(x)


def test_basic_ops():
    a, b = IntervalR(1, 2), IntervalR(-1, 3)
    assert (a + b).contains_zero()
    assert 0.0 in (a * b)
    assert (a - a).contains_zero()
    assert a.excludes_zero() and a.sign() == 1
    assert IntervalR(-2, -1).sign() == -1
    assert b.sign() == 0
    assert a.width == pytest.approx(1.0)


def test_reversed_bounds_rejected():
    with pytest.raises(ValueError):
        IntervalR(2.0, 1.0)


def test_inf_minus_inf_is_whole_line():
    big = IntervalR(1.0, math.inf)
    d = big - big
    assert d.lo == -math.inf and d.hi == math.inf
    assert (big + (-big)).contains_zero()


def test_isum_encloses():
    parts = [IntervalR(0.1, 0.1)] * 10
    s = isum(parts)
    assert s.lo <= 1.0 <= s.hi


@given(intervals(), intervals(), st.data())
def test_add_mul_enclose(a, b, data):
    x, y = _pick(data.draw, a), _pick(data.draw, b)
    assert (x + y) in (a + b)
    assert (x - y) in (a - b)
    assert (x * y) in (a * b)


@given(intervals(st.floats(-50, 50)), st.data())
def test_exp_encloses(a, data):
    x = _pick(data.draw, a)
    assert math.exp(x) in a.exp()


@given(intervals(positive), st.data())
def test_log_and_reciprocal_enclose(a, data):
    x = _pick(data.draw, a)
    assert math.log(x) in a.log()
    assert 1.0 / x in a.reciprocal()


def test_box_log_exp_contains():
    b = Box.from_bounds([(1.0, 2.0), (0.5, 0.75)])
    assert b.in_positive_orthant()
    back = b.log().exp()
    assert back.contains((1.0, 0.5)) and back.contains((2.0, 0.75))
    assert b.contains(b.mid)
    assert not Box.from_bounds([(0.0, 1.0)]).in_positive_orthant()


def test_box_around_and_inflate():
    b = Box.around((1.0, 2.0), 0.1)
    assert b.contains((1.05, 1.95))
    assert b.inflate(0.0, 1.0).contains((1.9, 2.9))
    assert b.as_bounds()[0] == (b[0].lo, b[0].hi)
