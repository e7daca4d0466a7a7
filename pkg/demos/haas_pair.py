"""Certify the five positive roots of the Haas trinomial pair and print them."""
import time
from pathlib import Path

from fewnomials import parse_system, solve_trinomial_pair

sf = parse_system((Path(__file__).parent / "systems" / "haas.txt").read_text())

t0 = time.perf_counter()
rep = solve_trinomial_pair(sf.system)
dt = time.perf_counter() - t0

print(f"class {rep.classification.name}, bound {rep.applied_bound} ({rep.provenance.value})")
print(f"status {rep.status}, count {rep.count_range}, {dt:.2f}s")
for c in rep.unique:
    (x1, x2) = c.box
    print(f"  x1 in [{x1.lo:.15g}, {x1.hi:.15g}]  x2 in [{x2.lo:.15g}, {x2.hi:.15g}]")
