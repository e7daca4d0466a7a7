"""Supports, Newton polygons, Minkowski sums and support-span tests."""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import DimensionError, Fewnomial, FewnomialSystem

Point = tuple[float, ...]

DIRECTION_TOL = 1e-12
COLLINEAR_TOL = 1e-12
DEFAULT_TAU_RANK = 1e-9


def support(f: Fewnomial) -> frozenset[Point]:
    """The set of exponent vectors of ``f`` (one per term)."""
    return frozenset(f.support)


def _cross(o: Sequence[float], a: Sequence[float], b: Sequence[float]) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _left_turn(o, a, b) -> bool:
    # Strict left turn, with a relative tolerance so that nearly collinear
    # real-exponent points are treated as collinear and dropped.
    c = _cross(o, a, b)
    scale = math.hypot(a[0] - o[0], a[1] - o[1]) * math.hypot(b[0] - o[0], b[1] - o[1])
    return c > COLLINEAR_TOL * scale


def convex_hull(points: Sequence[Sequence[float]]) -> list[Point]:
    """Counter-clockwise hull vertices, starting at the lowest-then-leftmost.

    Collinear boundary points are dropped.  Degenerate inputs give one vertex
    (a point) or two (a segment).
    """
    pts = sorted({(float(p[0]) + 0.0, float(p[1]) + 0.0) for p in points})
    if len(pts) <= 2:
        return _rotate_to_start(pts)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and not _left_turn(lower[-2], lower[-1], p):
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and not _left_turn(upper[-2], upper[-1], p):
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return _rotate_to_start(hull)


def _rotate_to_start(vs: list[Point]) -> list[Point]:
    if not vs:
        return vs
    k = min(range(len(vs)), key=lambda i: (vs[i][1], vs[i][0]))
    return vs[k:] + vs[:k]


class PolygonClass(enum.Enum):
    POINT = 1
    SEGMENT = 2
    TRIANGLE = 3
    QUADRILATERAL = 4
    PENTAGON = 5
    HEXAGON_OR_MORE = 6

    @classmethod
    def from_vertex_count(cls, k: int) -> "PolygonClass":
        if k < 1:
            raise ValueError("a polygon has at least one vertex")
        return cls(min(k, 6))


@dataclass(frozen=True)
class Polygon2:
    """A convex polygon in the plane, vertices counter-clockwise.

    The first vertex is the lowest (then leftmost) one.  Two vertices means
    a segment, one a point.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(map(float, v)) for v in self.vertices))
        if not self.vertices:
            raise ValueError("empty polygon")

    @classmethod
    def hull_of(cls, points) -> "Polygon2":
        return cls(tuple(convex_hull(points)))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def kind(self) -> PolygonClass:
        return PolygonClass.from_vertex_count(len(self.vertices))

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        if len(v) == 1:
            return []
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def edge_vectors(self) -> list[tuple[float, float]]:
        return [(b[0] - a[0], b[1] - a[1]) for a, b in self.edges()]

    def inner_normals(self) -> list[tuple[float, float]]:
        """Inner normal of each edge (the face it selects is that edge)."""
        # for a ccw polygon the interior is to the left of each edge vector
        return [(-dy, dx) for dx, dy in self.edge_vectors()]

    def area(self) -> float:
        v = self.vertices
        return 0.5 * sum(_cross((0.0, 0.0), v[i], v[(i + 1) % len(v)]) for i in range(len(v)))

    def translate(self, shift: Sequence[float]) -> "Polygon2":
        return Polygon2(tuple((x + shift[0], y + shift[1]) for x, y in self.vertices))

    def same_as(self, other: "Polygon2", tol: float = 1e-12) -> bool:
        if len(self) != len(other):
            return False
        return all(
            abs(p[0] - q[0]) <= tol * max(1.0, abs(p[0])) and abs(p[1] - q[1]) <= tol * max(1.0, abs(p[1]))
            for p, q in zip(self.vertices, other.vertices)
        )


def _require_plane(f: Fewnomial):
    if f.n != 2:
        raise DimensionError(f"Newton polygons need n = 2, got n = {f.n}")
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polygon")


def newton_polygon(f: Fewnomial) -> Polygon2:
    _require_plane(f)
    return Polygon2.hull_of(f.support)


def _angle(v: tuple[float, float]) -> float:
    a = math.atan2(v[1], v[0])
    return a + 2 * math.pi if a < 0 else a


def _unit(v):
    r = math.hypot(v[0], v[1])
    return (v[0] / r, v[1] / r)


def minkowski_sum(P: Polygon2, Q: Polygon2) -> Polygon2:
    """``P + Q`` by merging the two edge sequences by polar angle.

    Edges whose unit directions agree to within ``DIRECTION_TOL`` are fused,
    so the result has one edge per distinct direction.
    """
    start = (P.vertices[0][0] + Q.vertices[0][0], P.vertices[0][1] + Q.vertices[0][1])
    edges = sorted(P.edge_vectors() + Q.edge_vectors(), key=_angle)
    fused: list[list[float]] = []
    for e in edges:
        if fused:
            u, w = _unit(fused[-1]), _unit(e)
            if abs(u[0] - w[0]) <= DIRECTION_TOL and abs(u[1] - w[1]) <= DIRECTION_TOL:
                fused[-1][0] += e[0]
                fused[-1][1] += e[1]
                continue
        fused.append([e[0], e[1]])
    verts = [start]
    for dx, dy in fused[:-1]:
        x, y = verts[-1]
        verts.append((x + dx, y + dy))
    return Polygon2(tuple(verts))


def minkowski_sum_brute(P: Polygon2, Q: Polygon2) -> Polygon2:
    """Reference implementation: hull of all pairwise vertex sums."""
    return Polygon2.hull_of([(p[0] + q[0], p[1] + q[1]) for p in P.vertices for q in Q.vertices])


def pair_polygon(F: FewnomialSystem) -> Polygon2:
    if F.n != 2 or F.k != 2:
        raise DimensionError(f"expected a pair of bivariate fewnomials, got {F.k}x{F.n}")
    return minkowski_sum(newton_polygon(F[0]), newton_polygon(F[1]))


def classify_pair(F: FewnomialSystem) -> PolygonClass:
    return pair_polygon(F).kind


# -- rank based tests ---------------------------------------------------------


def numerical_rank(rows, tau_rank: float = DEFAULT_TAU_RANK) -> int:
    """Rank with singular values below ``tau_rank * sigma_max`` treated as zero."""
    M = np.asarray(rows, dtype=float)
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tau_rank * s[0]))


def _differences(f: Fewnomial) -> list[Point]:
    pts = f.support
    if not pts:
        return []
    o = pts[0]
    return [tuple(a - b for a, b in zip(p, o)) for p in pts[1:]]


def span_dimension(f: Fewnomial, tau_rank: float = DEFAULT_TAU_RANK) -> int:
    """Dimension of the linear space spanned by the translated support."""
    d = _differences(f)
    return numerical_rank(d, tau_rank) if d else 0


def mixed_volume_zero(F: FewnomialSystem, tau_rank: float = DEFAULT_TAU_RANK) -> bool:
    """True when some ``d + 1`` translated supports fit in a ``d``-dim subspace."""
    if F.k != F.n:
        raise DimensionError(f"mixed-volume test needs a square system, got {F.k}x{F.n}")
    if any(f.is_zero() for f in F):
        raise ValueError("mixed-volume test needs nonzero polynomials")
    diffs = [_differences(f) for f in F]
    for size in range(1, F.n + 1):
        for subset in itertools.combinations(range(F.n), size):
            rows = [r for i in subset for r in diffs[i]]
            r = numerical_rank(rows, tau_rank) if rows else 0
            if r <= size - 1:
                return True
    return False


def is_pyramidal(F: FewnomialSystem, tau_rank: float = DEFAULT_TAU_RANK) -> bool:
    """Literal subspace test on the spans ``L_i`` of the translated supports.

    For every ``i``: either ``L_i`` strictly contains every other ``L_j``, or
    some ``L_j`` adds exactly one dimension to ``L_i``.
    """
    if F.k != F.n:
        raise DimensionError(f"pyramidal test needs a square system, got {F.k}x{F.n}")
    diffs = [_differences(f) for f in F]
    dims = [numerical_rank(d, tau_rank) if d else 0 for d in diffs]

    def joint(i, j):
        rows = diffs[i] + diffs[j]
        return numerical_rank(rows, tau_rank) if rows else 0

    for i in range(F.k):
        others = [j for j in range(F.k) if j != i]
        contains_all = all(joint(i, j) == dims[i] and dims[j] < dims[i] for j in others)
        if contains_all:
            continue
        if any(joint(i, j) == dims[i] + 1 for j in others):
            continue
        return False
    return True


# -- initial forms ------------------------------------------------------------


def initial_form(f: Fewnomial, w: Sequence[float]) -> Fewnomial:
    """Sub-sum of ``f`` over the support points minimizing ``<a, w>``."""
    if len(w) != f.n:
        raise DimensionError("weight has the wrong length")
    vals = [sum(a * x for a, x in zip(t.exponent, w)) for t in f.terms]
    lo = min(vals)
    scale = max(1.0, max(abs(v) for v in vals))
    keep = [t for t, v in zip(f.terms, vals) if v - lo <= 1e-12 * scale]
    return Fewnomial(f.n, tuple(keep))


def edge_root_bound(f: Fewnomial, w: Sequence[float]) -> int:
    """Sign-alternation bound for positive roots of the edge form ``in_w(f)``.

    The face selected by ``w`` must be an edge; its terms are ordered along
    the edge direction and their coefficient signs counted.
    """
    from .univariate import sign_alternations

    _require_plane(f)
    g = initial_form(f, w)
    if len(g) < 2:
        raise ValueError(f"weight {tuple(w)} selects a vertex, not an edge")
    pts = g.support
    o = pts[0]
    direction = (-float(w[1]), float(w[0]))
    order = sorted(
        range(len(pts)),
        key=lambda i: (pts[i][0] - o[0]) * direction[0] + (pts[i][1] - o[1]) * direction[1],
    )
    return sign_alternations([g.terms[i].coeff for i in order])
