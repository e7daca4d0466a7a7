"""Isolate the roots of 1 - 1.12 t^0.5 (1-t)^0.02 - 0.71 t^-0.05 (1-t)^1.8 on (0, 1).

Also prints the second-derivative cubic bound and the residual of each
root, evaluated with mpmath at 30 digits.
"""
import mpmath

from fewnomials.univariate import TOneMinusTForm, certified_bound_trinomial, isolate_roots

form = TOneMinusTForm.of((-1.12, 0.5, 0.02), (-0.71, -0.05, 1.8))
res = isolate_roots(form)

print("cubic bound:", certified_bound_trinomial(1.12, 0.71, 0.5, 0.02, -0.05, 1.8))
print("status:", res.status, "count:", res.count_range)

mpmath.mp.dps = 30
for c in res.unique:
    t = mpmath.mpf(c.witness["mid"])
    r = 1 - mpmath.mpf("1.12") * t**0.5 * (1 - t) ** mpmath.mpf("0.02") \
        - mpmath.mpf("0.71") * t ** mpmath.mpf("-0.05") * (1 - t) ** mpmath.mpf("1.8")
    s = c.box[0]
    print(f"  t in [{s.lo:.12f}, {s.hi:.12f}]  f(mid) = {mpmath.nstr(r, 3)}")
