"""
Regression run over the catalog
===============================

Every catalog entry carries an expected upper chern rank.  The verifier
brackets it between the best candidate bundle and the obstruction rules.
"""

from collections import Counter

from chernlab import catalog

summary = catalog.verify_all(jobs=4)
print(Counter(v.status for v in summary.verdicts))

for v in summary.verdicts:
    if v.name in ("CP^3", "S^6", "S^2xS^4", "V_2(C^4)", "CP^5/CP^1", "S^6xRP^4", "S^1xS^5"):
        print(f"{v.name:10} {v.status:15} expected {v.expected:2} in {v.report.interval()}")

# a deliberately wrong expectation is caught
bad = catalog.verify_all(families={"CP": [(n,) for n in range(1, 9)]}, overrides={"CP^3": 7})
print()
print("with CP^3 -> 7:", [(v.name, v.status) for v in bad.verdicts if not v.passed])

# side checks attached to a single entry
for check in catalog.verify(catalog.space("CP", 4)).checks:
    print(f"  {check.name}: {check.passed} ({check.detail})")
