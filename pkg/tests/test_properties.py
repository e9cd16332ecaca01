"""Ring axioms on random elements of every catalog ring."""

import random

from chernlab.gring import normalize


def _random_homogeneous(ring, rng):
    degrees = [d for d in range(ring.max_degree + 1) if ring.basis[d]]
    d = rng.choice(degrees)
    out = ring.zero()
    for b in ring.basis_elements(d):
        out = out + b * rng.randint(-4, 4)
    return d, out


def test_ring_axioms_on_200_random_triples(all_entries):
    rng = random.Random(1729)
    for e in all_entries:
        r = e.ring
        for _ in range(200):
            (da, a), (db, b), (_, c) = (_random_homogeneous(r, rng) for _ in range(3))
            sign = -1 if da % 2 and db % 2 else 1
            assert a * b == (b * a) * sign, (e.name, str(a), str(b))
            assert (a * b) * c == a * (b * c), (e.name, str(a), str(b), str(c))
            s = a * 3 + b * c - c
            assert normalize(normalize(s, r), r) == normalize(s, r) == s
            assert a + b - b == a and a * r.one() == a


def test_normal_form_idempotent_on_raw_monomials(all_entries):
    from chernlab.gring import ambient_monomials
    rng = random.Random(31337)
    for e in all_entries:
        r = e.ring
        pool = [m for d in range(r.max_degree + 1) for m in ambient_monomials(r, d)]
        for _ in range(50):
            raw = {rng.choice(pool): rng.randint(-5, 5) for _ in range(3)}
            once = r.element(raw)
            assert r.element(once.terms) == once
            assert normalize(once, r) == once
            assert all(r.mono_degree(m) <= r.max_degree for m in once.terms)
