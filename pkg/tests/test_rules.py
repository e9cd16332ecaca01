import pytest

from chernlab import catalog
from chernlab.chern import bundle, trivial, whitney_sum
from chernlab.rules import (InconsistentBounds, PreconditionNotMet, SpaceMeta, bott_divisor,
                            chernrank_gap_check, combine, gap_check, is_power_of_two,
                            rank_report, uchrank_lower, uchrank_upper)


def test_lower_bound_examples():
    for n in range(1, 5):
        e = catalog.space("CP", n)
        l = bundle(e.ring, "L", {1: e.ring.gen("α")})
        assert uchrank_lower([l], e.ring, e.dim) == (2 * n, "L")
    s6 = catalog.space("S", 6)
    assert uchrank_lower([], s6.ring, 6) == (4, "trivial")
    r = catalog.space("SxS", 2, 4).ring
    x = whitney_sum(bundle(r, "A", {1: r.gen("a")}), bundle(r, "B", {2: r.gen("b")}), "A+B")
    assert uchrank_lower([x], r, 6)[0] == 6


def test_lower_bound_rejects_foreign_candidates():
    a, b = catalog.space("CP", 2), catalog.space("CP", 3)
    with pytest.raises(ValueError):
        uchrank_lower([trivial(b.ring)], a.ring, a.dim)


def _rules(entry):
    return {h.rule: h.bound for h in uchrank_upper(entry.ring, entry.meta)[1]}


def test_upper_bound_examples():
    e = catalog.space("SxS", 4, 4)
    assert uchrank_upper(e.ring, e.meta)[0] == 2 and _rules(e)["R1 non-cyclic"] == 2
    v = catalog.space("V", 2, 4)
    assert uchrank_upper(v.ring, v.meta)[0] == 10 and _rules(v)["R5 power of two"] == 10
    s6 = catalog.space("S", 6)
    assert uchrank_upper(s6.ring, s6.meta)[0] == 4 and _rules(s6)["R4 Bott sphere"] == 4
    s33 = catalog.space("SxS", 3, 3)
    assert uchrank_upper(s33.ring, s33.meta)[0] == 4 and _rules(s33)["R6 product K-trivial"] == 4


def test_rules_only_fire_on_their_flags():
    cp3 = catalog.space("CP", 3)
    bare = SpaceMeta(dim=6)
    upper, hits = uchrank_upper(cp3.ring, bare)
    assert upper == 6 and [h.rule for h in hits] == ["ceiling"]
    upper, hits = uchrank_upper(cp3.ring, SpaceMeta(dim=6, k_reduced_trivial=True))
    assert upper == 0
    # Bott rule ignores S^2 and S^4
    assert uchrank_upper(cp3.ring, SpaceMeta(dim=6, sphere_retract_dims=(2, 4)))[0] == 6
    with pytest.raises(ValueError):
        uchrank_upper(cp3.ring, SpaceMeta(dim=6, sphere_retract_dims=(3,)))


def test_suspension_rule_uses_k_x():
    w = catalog.space("SvS", 4, 4)
    upper, hits = uchrank_upper(w.ring, w.meta)
    assert _rules(w).get("R2 suspension") == 2 and upper == 2


def test_bott_divisor():
    assert [bott_divisor(n) for n in (1, 3, 4)] == [1, 2, 6]
    with pytest.raises(ValueError):
        bott_divisor(0)
    assert is_power_of_two(8) and not is_power_of_two(12) and not is_power_of_two(0)


def test_combine():
    assert combine(6, 6).determined
    r = combine(4, 6)
    assert not r.determined and r.interval() == "[4,6]"
    with pytest.raises(InconsistentBounds):
        combine(8, 6)


def test_gap_check_examples():
    cp3 = catalog.space("CP", 3)
    l = bundle(cp3.ring, "L", {1: cp3.ring.gen("α")})
    g = chernrank_gap_check(cp3.ring, 3, [l, trivial(cp3.ring)])
    assert g.passed and g.ranks == {"L": 6, "trivial": 0} and g.forbidden == (4, 6)
    cp2 = catalog.space("CP", 2)
    assert chernrank_gap_check(cp2.ring, 2, [bundle(cp2.ring, "L", {1: cp2.ring.gen("α")})]).passed


def test_gap_check_flags_contrived_rank():
    g = gap_check({"L": 6, "fake": 4}, 3, 2)
    assert not g.passed and g.violations == ["fake"]


def test_gap_check_preconditions():
    with pytest.raises(PreconditionNotMet):
        chernrank_gap_check(catalog.space("CP", 1).ring, 1, [])
    rp = catalog.space("RP", 6)
    with pytest.raises(PreconditionNotMet):
        chernrank_gap_check(rp.ring, 3, [])


def test_lower_never_exceeds_upper(all_entries):
    for e in all_entries:
        r = rank_report(e.candidates, e.ring, e.meta)
        assert r.lower <= r.upper, e.name
        assert r.rule_trace[0].rule == "ceiling"
