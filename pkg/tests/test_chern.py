from math import factorial

import pytest

from chernlab import catalog
from chernlab.chern import (BundleError, RingMap, bundle, chern_subgroup, chernrank, conjugate,
                            dual, from_total, identity_map, partitions, pullback, trivial,
                            whitney_sum)
from chernlab.gring import r_x


@pytest.fixture(scope="module")
def s2s4():
    return catalog.space("SxS", 2, 4).ring


def test_whitney_sum_of_sphere_pullbacks(s2s4):
    a, b = s2s4.gen("a"), s2s4.gen("b")
    x = whitney_sum(bundle(s2s4, "A", {1: a}), bundle(s2s4, "B", {2: b}))
    assert x.c(1) == a and x.c(2) == b and x.c(3) == a * b


def test_whitney_sum_with_trivial_keeps_classes(s2s4):
    x = bundle(s2s4, "A", {1: s2s4.gen("a"), 2: s2s4.gen("b")})
    assert whitney_sum(x, trivial(s2s4)).classes == x.classes


def test_whitney_square_over_cp2():
    r = catalog.space("CP", 2).ring
    a = r.gen("α")
    l = bundle(r, "L", {1: a})
    y = whitney_sum(l, l)
    assert y.c(1) == a * 2 and y.c(2) == a ** 2


def test_conjugate_examples():
    r = catalog.space("CP", 2).ring
    a = r.gen("α")
    x = bundle(r, "L", {1: a})
    assert conjugate(x).c(1) == -a
    assert conjugate(conjugate(x)).classes == x.classes
    h = catalog.space("HP", 2).ring
    y = bundle(h, "H", {2: h.gen("u")})
    assert conjugate(y).classes == y.classes
    assert dual(x).classes == conjugate(x).classes


def test_pullback_examples():
    s1s3 = catalog.space("SxS", 1, 3)
    s4 = catalog.space("S", 4).ring
    f = RingMap(s4, s1s3.ring, {"a": s1s3.ring.gen("a") * s1s3.ring.gen("b")}, "collapse")
    x = bundle(s4, "gen", {2: s4.gen("a")})
    y = pullback(f, x)
    assert y.c(2) == s1s3.ring.gen("a") * s1s3.ring.gen("b")
    assert chernrank(y, 4) == 4
    assert pullback(identity_map(s4), x).classes == x.classes
    cp2 = catalog.space("CP", 2).ring
    zero = RingMap(cp2, cp2, {"α": cp2.zero()}, "zero")
    assert pullback(zero, bundle(cp2, "L", {1: cp2.gen("α")})).is_trivial()


def test_ring_map_must_respect_relations():
    cp2 = catalog.space("CP", 2).ring
    cp4 = catalog.space("CP", 4).ring
    with pytest.raises(BundleError):
        RingMap(cp2, cp4, {"α": cp4.gen("α")})  # α^3 = 0 is not preserved
    with pytest.raises(BundleError):
        RingMap(cp4, cp2, {"α": cp2.gen("α") ** 2})  # wrong degree


def test_chern_subgroup_examples():
    cp3 = catalog.space("CP", 3).ring
    a = cp3.gen("α")
    l = bundle(cp3, "L", {1: a})
    assert chern_subgroup(l, 6) == [(1,), (0,), (0,)]
    cp2 = catalog.space("CP", 2).ring
    x = bundle(cp2, "2L", {1: cp2.gen("α") * 2})
    assert chern_subgroup(x, 4) == [(4,), (0,)]
    assert chernrank(x) == 0
    assert chern_subgroup(trivial(cp2), 2) == [(0,)]


def test_partitions_order():
    assert list(partitions(3)) == [(1, 1, 1), (2, 1), (3,)]
    assert list(partitions(4, 2)) == [(1, 1, 1, 1), (2, 1, 1), (2, 2)]


def test_chernrank_examples():
    for n in range(1, 7):
        r = catalog.space("CP", n).ring
        assert chernrank(bundle(r, "L", {1: r.gen("α")})) == 2 * n
    cp3 = catalog.space("CP", 3).ring
    assert chernrank(trivial(cp3)) == r_x(cp3) - 2 == 0
    s6 = catalog.space("S", 6).ring
    assert chernrank(bundle(s6, "x", {3: s6.gen("a") * 2})) == 4
    for k in range(1, 6):
        r = catalog.space("RP", 2 * k).ring
        assert chernrank(bundle(r, "ξ", {1: r.gen("α")})) == 2 * k


def test_bundle_validation():
    r = catalog.space("CP", 3).ring
    with pytest.raises(BundleError):
        bundle(r, "bad", {1: r.gen("α") ** 2})
    with pytest.raises(BundleError):
        from_total(r, "bad", r.gen("α"))
    other = catalog.space("CP", 2).ring
    with pytest.raises(BundleError):
        whitney_sum(trivial(r), trivial(other))


# -- properties over the whole catalog ---------------------------------------

def _candidates(entries):
    for e in entries:
        for x in e.candidates:
            yield e, x


def test_conjugation_involution_and_invariance(all_entries):
    for e, x in _candidates(all_entries):
        cx = conjugate(x)
        assert conjugate(cx).classes == x.classes, (e.name, x.label)
        assert chernrank(cx, e.dim) == chernrank(x, e.dim), (e.name, x.label)


def test_chernrank_at_least_r_x_minus_two(all_entries):
    for e, x in _candidates(all_entries):
        rx = r_x(e.ring, e.dim)
        assert chernrank(x, e.dim) >= min(rx - 2, e.dim - e.dim % 2), (e.name, x.label)
        assert chernrank(trivial(e.ring), e.dim) == min(rx - 2, e.dim - e.dim % 2)


def test_pullback_inequality_on_catalog_maps(all_entries):
    maps = catalog.catalog_maps(all_entries)
    dims = {id(e.ring): e.dim for e in all_entries}
    cands = {id(e.ring): e.candidates for e in all_entries}
    assert len(maps) > len(all_entries)
    for f in maps:
        assert f.is_surjective(), f.name
        src_dim, dst_dim = dims[id(f.source)], dims[id(f.target)]
        for x in list(cands[id(f.source)]) + [trivial(f.source)]:
            lhs = chernrank(pullback(f, x), dst_dim)
            assert lhs >= min(chernrank(x, src_dim), dst_dim - 1), (f.name, x.label)


def _coefficient(x, n, gen):
    c = x.c(n)
    ring = x.ring
    coords = ring.coords(c, 2 * n)
    [pos] = [i for i, m in enumerate(ring.basis[2 * n]) if ring.mono_str(m) == gen]
    return coords[pos]


def test_bott_divisibility_of_candidates(all_entries):
    seen = 0
    for e in all_entries:
        if e.family == "S" and e.params[0] % 2 == 0:
            n = e.params[0] // 2
            for x in e.candidates:
                assert _coefficient(x, n, "a") % factorial(n - 1) == 0, (e.name, x.label)
                seen += 1
    for f in catalog.catalog_maps(all_entries):
        tgt = f.target
        if tgt.names == ["a"] and tgt.degrees[0] % 2 == 0 and len(tgt.basis[tgt.degrees[0]]) == 1 \
                and tgt.max_degree == tgt.degrees[0]:
            n = tgt.degrees[0] // 2
            src_entry = next(e for e in all_entries if e.ring is f.source)
            for x in src_entry.candidates:
                y = pullback(f, x)
                assert _coefficient(y, n, "a") % factorial(n - 1) == 0, (f.name, x.label)
                seen += 1
    for e in all_entries:
        if e.family == "CP/CP" and e.params[1] == 1:
            for x in e.candidates:
                assert _coefficient(x, 3, "u3") % 2 == 0
                seen += 1
    assert seen > 50


def test_vanishing_class_in_degree_r_x(all_entries):
    # read as the class living in degree r_X, that is c_{r_X / 2}
    seen = 0
    for e in all_entries:
        rx = r_x(e.ring, e.dim)
        if rx > e.dim:
            continue
        for x in list(e.candidates) + [trivial(e.ring)]:
            if not x.c(rx // 2):
                assert chernrank(x, e.dim) == rx - 2, (e.name, x.label)
                seen += 1
    assert seen > len(all_entries) // 2
