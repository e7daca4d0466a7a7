import json

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from conftest import P, S
from fewnomials import (
    FormulaId,
    NotPyramidalError,
    PipelineReport,
    PolygonClass,
    count_report,
    evaluate_interval,
    haas_family,
    solve,
    solve_pyramidal,
    solve_trinomial_pair,
)
from fewnomials.bounds import polygon_class_bound
from fewnomials.solver import product_system


def test_binomial_member_uses_product_bound():
    rep = solve_trinomial_pair(S(P((1, (1, 0)), (-2, (0, 0))), P((1, (1, 1)), (-1, (0, 0)))))
    assert rep.provenance is FormulaId.THM_TRI1 and rep.applied_bound == 1
    assert rep.count_range == (1, 1)
    assert rep.unique[0].box.inflate(0.0, 1e-12).contains((2.0, 0.5))


def test_sign_rule():
    rep = solve_trinomial_pair(S(P((1, (1, 0)), (1, (0, 1)), (1, (0, 0))), P((1, (0, 1)), (-1, (0, 0)))))
    assert rep.provenance is FormulaId.SIGN_RULE
    assert rep.count_range == (0, 0) and rep.complete


def test_mixed_volume_zero_pair():
    rep = solve_trinomial_pair(S(P((1, (1, 1)), (-1, (0, 0))), P((1, (2, 2)), (1, (1, 1)), (-3, (0, 0)))))
    assert rep.provenance is FormulaId.COR_ZERO
    assert rep.count_range == (0, 0)


def test_tangency_is_not_certified():
    # the line y1 + y2 = 1 touches the hyperbola 4 y1 y2 = 1 at (1/2, 1/2)
    rep = solve_trinomial_pair(S(P((1, (0, 0)), (-1, (1, 0)), (-1, (0, 1))), P((1, (0, 0)), (-4, (1, 1)))))
    assert not rep.complete
    assert rep.count_range[0] == 0 and rep.count_range[1] >= 1


def test_ill_conditioned_pair_is_undetermined():
    f1 = P((1, (0, 0)), (-2, (1, 0)), (-3, (1, 1e-7)))
    f2 = P((1, (0, 0)), (-5, (0, 1)), (-7, (1e-7, 1)))
    rep = solve_trinomial_pair(S(f1, f2))
    assert rep.undetermined and not rep.complete
    assert rep.count_range == (0, rep.applied_bound)


def test_haas_report(haas):
    rep = solve_trinomial_pair(haas)
    assert rep.classification is PolygonClass.HEXAGON_OR_MORE
    assert rep.provenance is FormulaId.THM_TRI3 and rep.applied_bound == 5
    mids = [c.box.mid for c in rep.unique]
    assert mids == sorted(mids)
    # symmetric under swapping x1 and x2
    swapped = sorted((y, x) for x, y in mids)
    assert np.allclose(swapped, mids, rtol=1e-9)
    d = rep.to_dict()
    json.dumps(d)
    assert d["count_range"] == [5, 5] and len(d["roots"]) == 5


def test_haas_family_shape():
    F = haas_family(2)
    assert F.n == 4 and F.type == (3, 3, 3, 3)
    assert count_report(haas_family(1)) == (5, 5)


def test_dispatch():
    assert isinstance(solve(product_system(2)), PipelineReport)
    assert solve(product_system(3)).count_range == (8, 8)
    with pytest.raises(NotPyramidalError):
        solve(haas_family(2))
    with pytest.raises(ValueError):
        solve_trinomial_pair(S(P((1, (2, 0)), (1, (0, 2)), (1, (1, 1)), (-5, (0, 0))), P((1, (3, 0)), (1, (0, 3)), (1, (1, 1)), (-5, (0, 0)))))


def test_pyramidal_with_other_roots():
    res = solve_pyramidal(product_system(2, roots=(0.5, 3.0, 7.0)))
    assert res.count_range == (9, 9) and res.bound == 9
    mids = sorted(tuple(round(v, 9) for v in c.box.mid) for c in res.unique)
    assert mids == sorted((a, b) for a in (0.5, 3.0, 7.0) for b in (0.5, 3.0, 7.0))


def test_pyramidal_triangular():
    # x1 = 2, then x1 x2 = 3
    F = S(P((1, (1, 0)), (-2, (0, 0))), P((1, (1, 1)), (-3, (0, 0))))
    res = solve_pyramidal(F)
    assert res.count_range == (1, 1)
    assert res.unique[0].box.inflate(0.0, 1e-12).contains((2.0, 1.5))


def test_pyramidal_rejects_non_pyramidal(haas):
    with pytest.raises(NotPyramidalError):
        solve_pyramidal(haas)


@st.composite
def small_pairs(draw):
    pts = draw(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=6, max_size=6, unique=True))
    cs = [draw(st.floats(0.2, 5)) * draw(st.sampled_from([-1, 1])) for _ in range(6)]
    return S(P(*zip(cs[:3], pts[:3])), P(*zip(cs[3:], pts[3:])))


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_pairs())
def test_pipeline_invariants(F):
    rep = solve_trinomial_pair(F)
    lo, hi = rep.count_range
    assert lo <= hi
    assert lo <= rep.applied_bound <= 5
    assert lo <= polygon_class_bound(rep.classification)
    for c in rep.unique:
        assert all(evaluate_interval(f, c.box).contains_zero() for f in F)
    # boxes are pairwise disjoint
    boxes = [c.box for c in rep.unique]
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            assert any(a.hi < b.lo or b.hi < a.lo for a, b in zip(boxes[i], boxes[j]))


@settings(max_examples=40, deadline=None)
@given(small_pairs())
def test_order_of_equations_does_not_change_count(F):
    a = solve_trinomial_pair(F)
    b = solve_trinomial_pair(S(F[1], F[0]))
    assume(a.complete and b.complete)
    assert a.count_range == b.count_range
