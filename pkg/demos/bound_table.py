from fewnomials import khovanski_bound, kprime_bound, pyramidal_bound, trinomial_m_bound
from fewnomials.bounds import component_bounds, nprime_trinomial_khovanski

# Khovanski's count grows fast; the trinomial-specific bound does not.
for mu in (5, 6, 7):
    print(f"K(2,{mu})  = {khovanski_bound(2, mu)}")
print("N(3,m), m = 3..8:", trinomial_m_bound(3, 4, 5, 6, 7, 8))
print("Khovanski applied to a trinomial pair:", nprime_trinomial_khovanski(3).value)
print("pyramidal (2,2,21):", pyramidal_bound(2, 2, 21))
for n, mu in ((1, 6), (2, 4), (3, 6)):
    r = kprime_bound(n, mu)
    print(f"K'({n},{mu}) <= {r.value}  [{r.formula_id.value}] {r.note}")
comp, non = component_bounds(2, 4)
print(f"tetranomial curves: <= {comp.value} compact, <= {non.value} non-compact components")
