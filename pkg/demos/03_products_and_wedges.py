"""
Products and wedges of spheres
==============================

Whitney sums of pulled-back sphere bundles, the non-cyclic obstruction on
S^4 x S^4, and the suspension bound for wedges.
"""

from chernlab import catalog, chernrank, rank_report, whitney_sum
from chernlab.chern import bundle

e = catalog.space("SxS", 2, 4)
r = e.ring
a, b = r.gen("a"), r.gen("b")
pa = bundle(r, "p_a", {1: a})
pb = bundle(r, "p_b", {2: b})
s = whitney_sum(pa, pb)
# (1 + a)(1 + b) = 1 + a + b + ab, so c_3 = ab generates the top class
print(s)
print("chernrank:", chernrank(pa), chernrank(pb), "->", chernrank(s))

# in S^4 x S^4 the group H^4 = Z^2 is not cyclic; no bundle gets past degree 2
e44 = catalog.space("SxS", 4, 4)
print()
print(e44.ring.describe())
rep = rank_report(e44.candidates, e44.ring, e44.meta)
print("uchrank in", rep.interval(), "via", [h.rule for h in rep.rule_trace])

# wedges: all products of positive classes vanish
for m1, m2 in [(2, 4), (2, 6), (4, 4), (3, 6)]:
    w = catalog.space("SvS", m1, m2)
    rep = rank_report(w.candidates, w.ring, w.meta)
    print(f"{w.name:8} expected {w.expected_uchrank:2}  interval {rep.interval()}")
