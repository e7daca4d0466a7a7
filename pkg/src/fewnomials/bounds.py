"""Closed-form root and component bounds, each tagged with its formula.

All arithmetic is on Python integers, so values such as ``2^(mu(mu-1)/2)``
never overflow.  A :class:`BoundReport` carries the value, which formula
produced it, the inputs, and whether the value is known to be sharp
(``exact``) or only an upper bound.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Mapping

from .polytope import PolygonClass


class FormulaId(enum.Enum):
    THM_TRI3 = "THM_TRI3"                    # N(3,m) <= 2^m - 2, N(3,3) = 5
    COR_POLY = "COR_POLY"                    # trinomial pairs by Minkowski-sum shape
    KHOVANSKI = "KHOVANSKI"                  # (n+1)^mu 2^(mu(mu-1)/2)
    THM_TRI1 = "THM_TRI1"                    # pyramidal product prod(m_i - 1)
    THM_COOL_COMP = "THM_COOL_COMP"          # compact components
    THM_COOL_NONCOMP = "THM_COOL_NONCOMP"    # non-compact components
    COROLLARY_COMPONENTS = "COROLLARY_COMPONENTS"
    NEWROLLE = "NEWROLLE"                    # line/curve intersections I + V + 2
    COR_ZERO = "COR_ZERO"                    # supports of mixed volume zero: no roots
    LEMMA_BASIC = "LEMMA_BASIC"              # second-derivative cubic sign count
    SIGN_RULE = "SIGN_RULE"                  # one equation has constant sign
    UGDRS = "UGDRS"                          # univariate sign alternations
    REMARK_KHO = "REMARK_KHO"                # chained comparisons between N' and K'
    CURVE_FEATURES = "CURVE_FEATURES"        # inflection / vertical tangency counts


@dataclass(frozen=True)
class BoundReport:
    value: int | None  # None means no finite bound is known
    formula_id: FormulaId
    inputs: Mapping[str, Any] = field(default_factory=dict)
    exact: bool = False
    note: str = ""

    @property
    def unknown_exact(self) -> bool:
        return not self.exact

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "formula_id": self.formula_id.value,
            "inputs": dict(self.inputs),
            "exact": self.exact,
            "note": self.note,
        }

    def __int__(self) -> int:
        if self.value is None:
            raise ValueError("bound is unknown")
        return self.value


def _pos_int(name: str, v) -> int:
    if int(v) != v or v < 1:
        raise ValueError(f"{name} must be a positive integer, got {v}")
    return int(v)


def khovanski_bound(n: int, mu: int) -> int:
    """``(n+1)^mu * 2^(mu(mu-1)/2)``: non-degenerate roots with ``mu`` exponent vectors."""
    n, mu = _pos_int("n", n), _pos_int("mu", mu)
    return (n + 1) ** mu * 2 ** (mu * (mu - 1) // 2)


def trinomial_m_bound(m: int, *more: int):
    """Roots of a trinomial paired with an ``m``-nomial: 5 for ``m = 3``, else ``2^m - 2``.

    Several ``m`` give a tuple.
    """
    if more:
        return tuple(trinomial_m_bound(x) for x in (m,) + more)
    if int(m) != m or m < 3:
        raise ValueError(f"m must be an integer >= 3, got {m}")
    return 5 if m == 3 else 2 ** int(m) - 2


_CLASS_BOUNDS = {
    PolygonClass.POINT: (0, FormulaId.COR_POLY),
    PolygonClass.SEGMENT: (0, FormulaId.COR_POLY),
    PolygonClass.TRIANGLE: (2, FormulaId.COR_POLY),
    PolygonClass.QUADRILATERAL: (4, FormulaId.COR_POLY),
    PolygonClass.PENTAGON: (4, FormulaId.COR_POLY),
    PolygonClass.HEXAGON_OR_MORE: (5, FormulaId.THM_TRI3),
}


def polygon_class_bound(cls: PolygonClass) -> int:
    """Maximum isolated roots of a trinomial pair whose Minkowski sum has this shape."""
    return _CLASS_BOUNDS[cls][0]


def polygon_class_report(cls: PolygonClass) -> BoundReport:
    v, fid = _CLASS_BOUNDS[cls]
    return BoundReport(v, fid, {"class": cls.name}, exact=True)


def pyramidal_bound(*ms: int) -> int:
    """``prod(m_i - 1)``."""
    if len(ms) == 1 and not isinstance(ms[0], int):
        ms = tuple(ms[0])
    return math.prod(_pos_int("m_i", m) - 1 for m in ms)


def descartes_report(alternations: int) -> BoundReport:
    return BoundReport(alternations, FormulaId.UGDRS, {"alternations": alternations})


def _known_nprime(ms: tuple[int, ...]) -> tuple[int | None, bool]:
    """Known value of the max non-degenerate root count for type ``ms``."""
    if any(m <= 1 for m in ms):
        return 0, True
    if len(ms) == 1:
        return ms[0] - 1, True
    if all(m == 2 for m in ms):
        return 1, True
    srt = sorted(ms)
    if len(ms) == 2 and srt[0] == 2:
        return srt[1] - 1, True
    if len(ms) == 2 and srt[0] == 3:
        return trinomial_m_bound(srt[1]), srt[1] == 3
    return None, False


def kprime_bound(n: int, mu: int) -> BoundReport:
    """Best bound on the non-degenerate roots of ``n x n`` systems with ``mu`` exponents.

    ``n = 1`` is the sign-rule value ``mu - 1``.  Otherwise the count is at
    most the one for ``n`` polynomials with ``mu - 1`` terms each (Gaussian
    elimination), which is compared with the Khovanski formula.
    """
    n, mu = _pos_int("n", n), _pos_int("mu", mu)
    kho = khovanski_bound(n, mu)
    if n == 1:
        return BoundReport(mu - 1, FormulaId.UGDRS, {"n": n, "mu": mu}, exact=True)
    val, exact = _known_nprime((mu - 1,) * n)
    if val is not None and val <= kho:
        return BoundReport(
            val, FormulaId.REMARK_KHO, {"n": n, "mu": mu},
            exact=exact and val == 0,
            note=f"via type {(mu - 1,) * n}",
        )
    return BoundReport(kho, FormulaId.KHOVANSKI, {"n": n, "mu": mu})


def nprime_trinomial_khovanski(m: int) -> BoundReport:
    """Khovanski-only bound for a trinomial and an ``m``-nomial in two variables.

    Dividing by monomials leaves ``m + 2`` distinct exponent vectors.
    """
    m = _pos_int("m", m)
    return BoundReport(khovanski_bound(2, m + 2), FormulaId.REMARK_KHO, {"m": m}, note="mu = m + 2")


def component_bounds(n: int, m: int) -> tuple[BoundReport, BoundReport]:
    """Bounds on compact and non-compact components of an ``n``-variate ``m``-nomial zero set."""
    n, m = _pos_int("n", n), _pos_int("m", m)
    inputs = {"n": n, "m": m}
    if n == 1:
        comp = BoundReport(m - 1, FormulaId.THM_COOL_COMP, inputs, exact=True)
        non = BoundReport(1 if m == 0 else 0, FormulaId.THM_COOL_NONCOMP, inputs, exact=True)
        return comp, non
    kp = kprime_bound(n, m)
    comp = BoundReport(
        2 * math.ceil(kp.value / 2), FormulaId.THM_COOL_COMP, inputs,
        note=f"K'({n},{m}) <= {kp.value} ({kp.formula_id.value})",
    )
    if n == 2:
        non = BoundReport(math.ceil(m / 2), FormulaId.THM_COOL_NONCOMP, inputs)
    else:
        pc, pn = component_bounds(n - 1, m)
        non = BoundReport(2 * (pc.value + pn.value), FormulaId.THM_COOL_NONCOMP, inputs)
    return comp, non


def explicit_component_bound(n: int, m: int) -> int:
    """``2^((m-1)(m-2)/2) * 2^(n-2) * n * (n+1)^(m-1)``."""
    n, m = _pos_int("n", n), _pos_int("m", m)
    if n < 2:
        raise ValueError("the explicit component bound needs n >= 2")
    return 2 ** ((m - 1) * (m - 2) // 2) * 2 ** (n - 2) * n * (n + 1) ** (m - 1)


def line_curve_bound(I: int, V: int) -> int:
    """Finite intersections of a line with a curve having ``I`` inflections and ``V`` vertical tangents."""
    if I < 0 or V < 0:
        raise ValueError("counts must be nonnegative")
    return I + V + 2


def all_reports() -> dict[str, list[BoundReport]]:
    """A small table of the headline values, used by the CLI ``bounds`` command."""
    return {
        "khovanski": [BoundReport(khovanski_bound(2, mu), FormulaId.KHOVANSKI, {"n": 2, "mu": mu}) for mu in (5, 6, 7)],
        "trinomial": [
            BoundReport(trinomial_m_bound(m), FormulaId.THM_TRI3, {"m": m}, exact=m == 3) for m in (3, 4, 5)
        ],
        "polygon": [polygon_class_report(c) for c in PolygonClass],
    }
