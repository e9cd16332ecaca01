"""
Even spheres and Bott integrality
=================================

Over S^{2n} the only interesting class is c_n.  Integrality says it is a
multiple of (n-1)! times the generator, so for n >= 3 no bundle reaches
the top group and the upper chern rank drops to 2n - 2.
"""

from chernlab import catalog, rank_report
from chernlab.rules import bott_divisor

for n in range(1, 7):
    results = catalog.sphere_bundle_search(n, multiples=range(-3, 4))
    best = max(rank for _, rank in results)
    print(f"S^{2 * n}: c_{n} must be a multiple of {bott_divisor(n)};"
          f" best chernrank among {[c for c, _ in results]} is {best}")

# the same conclusion through the rule engine
s6 = catalog.space("S", 6)
report = rank_report(s6.candidates, s6.ring, s6.meta)
print()
print("uchrank(S^6) in", report.interval())
for hit in report.rule_trace:
    print("  ", hit)

# odd spheres have no even classes at all: r_X = dim + 1
s5 = catalog.space("S", 5)
print("uchrank(S^5) in", rank_report(s5.candidates, s5.ring, s5.meta).interval())
