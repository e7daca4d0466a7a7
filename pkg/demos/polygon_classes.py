"""Classify a few trinomial pairs by the shape of their Minkowski sum and count roots."""
from fewnomials import Fewnomial, FewnomialSystem, solve_trinomial_pair
from fewnomials.polytope import pair_polygon


def P(*pairs):
    return Fewnomial.from_pairs(2, pairs)


pairs = {
    "circle/line": (P((1, (2, 0)), (1, (0, 2)), (-25, (0, 0))), P((1, (1, 0)), (1, (0, 1)), (-7, (0, 0)))),
    "two quadratics": (P((1, (2, 0)), (-3, (1, 0)), (2, (0, 0))), P((1, (0, 2)), (-3, (0, 1)), (2, (0, 0)))),
    "pentagon": (P((1, (0, 2)), (-7, (0, 1)), (12, (0, 0))), P((-1, (0, 0)), (1, (1, 1)), (-1, (2, 0)))),
    "generic": (P((1, (0, 0)), (-2, (3, 1)), (1.5, (1, 2))), P((-1, (0, 0)), (0.5, (2, 3)), (1, (3, 0)))),
}

for name, (f, g) in pairs.items():
    F = FewnomialSystem.of(f, g)
    rep = solve_trinomial_pair(F)
    verts = ", ".join(f"({x:g},{y:g})" for x, y in pair_polygon(F).vertices)
    print(f"{name:15s} {rep.classification.name:16s} bound {rep.applied_bound} "
          f"({rep.provenance.value:9s}) roots {rep.count_range}  hull {verts}")
