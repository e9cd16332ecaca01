"""
Ring description files
======================

The line-oriented text format used by the command-line tool.  Files in
rings/ were written with `chernlab catalog export` or by hand.
"""

from pathlib import Path

from chernlab import chernrank, even_cup_length, rank_report
from chernlab.dsl import DslError, parse

here = Path(__file__).parent / "rings"

for name in ("cp3.ring", "rp4.ring", "s2xs4.ring", "cp5_cp1.ring", "v2c4.ring"):
    doc = parse((here / name).read_text(encoding="utf-8"))
    ring = doc.ring()
    ranks = {x.label: chernrank(x, doc.dim) for x in doc.bundle_objects()}
    rep = rank_report(doc.bundle_objects(), ring, doc.meta())
    print(f"{doc.name:10} cup={even_cup_length(ring, doc.dim).length} ranks={ranks} "
          f"uchrank in {rep.interval()}")

# errors point at the offending line and column
for text in ["space X dim 4\ngen a deg 2\nbundle L\nc1 = a^2\n",
             "space X dim 4\ngen a deg 2\nrel a^3 = b\n"]:
    try:
        parse(text).ring()
    except DslError as exc:
        print(type(exc).__name__, exc)

try:
    parse((here / "bad_confluence.ring").read_text(encoding="utf-8")).ring()
except ValueError as exc:
    print(type(exc).__name__, exc)
