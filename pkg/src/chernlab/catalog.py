"""Catalog of spaces with known upper chern rank, and the harness that
checks the engine against those values.

Each entry pairs a ring presentation and its metadata with the candidate
bundles used for lower bounds.  The expected value carries a short
justification.  ``verify`` brackets the expected value between the lower
bound from candidates and the upper bound from the rules.
"""

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from math import factorial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .chern import (Bundle, RingMap, bundle, chernrank, identity_map, pullback, trivial,
                    whitney_sum)
from .cuplen import (chern_monomial_length, cup_bound_hypothesis, cup_length_bound,
                     even_cup_length)
from .gring import (Generator, GradedRing, Relation, RingPresentation, TablePresentation,
                    compile_presentation, r_x)
from .rules import (PreconditionNotMet, RankReport, SpaceMeta, bott_divisor, chernrank_gap_check,
                    rank_report, uchrank_lower, uchrank_upper)

DETERMINED = "DETERMINED"
PAPER_ASSERTED = "PAPER-ASSERTED"
FAIL = "FAIL"


class UnsupportedParams(ValueError):
    pass


@dataclass
class SpaceEntry:
    family: str
    params: Tuple[int, ...]
    name: str
    presentation: object
    ring: GradedRing
    meta: SpaceMeta
    candidates: List[Bundle]
    expected_uchrank: int
    citation: str
    expected_cup_e: Optional[int] = None

    @property
    def dim(self) -> int:
        return self.meta.dim


# -- presentations ----------------------------------------------------------

G = Generator


def sphere_presentation(n: int, gen: str = "a") -> RingPresentation:
    return RingPresentation([G(gen, n)], [Relation({gen: 2})], n, name=f"S^{n}")


def cp_presentation(n: int, gen: str = "α") -> RingPresentation:
    return RingPresentation([G(gen, 2)], [Relation({gen: n + 1})], 2 * n, name=f"CP^{n}")


def hp_presentation(n: int, gen: str = "u") -> RingPresentation:
    return RingPresentation([G(gen, 4)], [Relation({gen: n + 1})], 4 * n, name=f"HP^{n}")


def rp_presentation(n: int) -> RingPresentation:
    k = n // 2
    if n == 1:
        return RingPresentation([G("λ", 1)], [], 1, name="RP^1")
    gens = [G("α", 2)]
    rels = [Relation({"α": 1}, (), 2), Relation({"α": k + 1})]
    if n % 2:
        gens.append(G("λ", n))
        rels += [Relation({"λ": 2}), Relation({"α": 1, "λ": 1})]
    return RingPresentation(gens, rels, n, name=f"RP^{n}")


def product_presentation(p: RingPresentation, q: RingPresentation, name: str = "") -> RingPresentation:
    """Tensor product of two presentations with disjoint generator names."""
    clash = {g.name for g in p.generators} & {g.name for g in q.generators}
    if clash:
        raise ValueError(f"generator names clash: {sorted(clash)}")
    return RingPresentation(p.generators + q.generators, p.relations + q.relations,
                            p.max_degree + q.max_degree, p.modulus,
                            name or f"{p.name}x{q.name}")


def wedge_presentation(p: RingPresentation, q: RingPresentation, name: str = "") -> RingPresentation:
    """Wedge sum: all products of positive classes from different summands vanish."""
    clash = {g.name for g in p.generators} & {g.name for g in q.generators}
    if clash:
        raise ValueError(f"generator names clash: {sorted(clash)}")
    cross = [Relation({g.name: 1, h.name: 1}) for g in p.generators for h in q.generators]
    return RingPresentation(p.generators + q.generators, p.relations + q.relations + cross,
                            max(p.max_degree, q.max_degree), p.modulus,
                            name or f"{p.name}v{q.name}")


def stunted_cp_presentation(n: int, m: int) -> TablePresentation:
    """CP^n/CP^m: classes u_i = α^i for m < i <= n with u_i u_j = u_{i+j}."""
    idx = range(m + 1, n + 1)
    basis = [G(f"u{i}", 2 * i) for i in idx]
    products = {}
    for i in idx:
        for j in idx:
            if i <= j and i + j <= n:
                products[(f"u{i}", f"u{j}")] = [(1, f"u{i + j}")]
    return TablePresentation(basis, products, 2 * n, name=f"CP^{n}/CP^{m}")


# -- sphere bundles ---------------------------------------------------------

def sphere_generator_bundle(ring: GradedRing, gen: str, degree: int, label: str) -> Optional[Bundle]:
    """Pullback of the best bundle on S^degree: c_n = (n-1)! times the generator."""
    if degree % 2:
        return None
    n = degree // 2
    mult = bott_divisor(n)
    why = ("c_n generates H^2n" if mult == 1 else
           f"c_{n} = {mult} times the generator, the least value allowed by Bott integrality")
    return bundle(ring, label, {n: ring.gen(gen) * mult}, why)


def sphere_bundle_search(n: int, multiples: Iterable[int] = range(-6, 7)) -> List[Tuple[int, int]]:
    """Chern ranks over S^{2n} of every admissible top class c_n = j (n-1)! a."""
    ring = compile_presentation(sphere_presentation(2 * n))
    out = []
    for j in multiples:
        coef = j * bott_divisor(n)
        x = bundle(ring, f"c{n}={coef}a", {n: ring.gen("a") * coef})
        out.append((coef, chernrank(x)))
    return out


# -- families ---------------------------------------------------------------

def _entry(family, params, name, pres, meta, make_candidates, expected, citation, cup=None):
    ring = compile_presentation(pres)
    return SpaceEntry(family, tuple(params), name, pres, ring, meta, make_candidates(ring),
                      expected, citation, cup)


def _cp(n):
    if n < 1:
        raise UnsupportedParams("CP^n needs n >= 1")
    meta = SpaceMeta(2 * n, complex_dim=n, notes={"complex_dim": "CP^n is a closed complex n-fold"})
    return _entry("CP", (n,), f"CP^{n}", cp_presentation(n), meta,
                  lambda r: [bundle(r, "L", {1: r.gen("α")}, "canonical line bundle; c_1 generates"),
                             trivial(r)],
                  2 * n, "c_1 of the canonical line bundle generates H^*(CP^n)", n)


def _hp(n):
    if n < 1:
        raise UnsupportedParams("HP^n needs n >= 1")
    return _entry("HP", (n,), f"HP^{n}", hp_presentation(n), SpaceMeta(4 * n),
                  lambda r: [bundle(r, "M", {2: r.gen("u")},
                                    "canonical quaternionic line bundle as a complex 2-plane bundle")],
                  4 * n, "c_2 of the canonical quaternionic line bundle generates H^*(HP^n)", n)


def _sphere(n):
    if n < 1:
        raise UnsupportedParams("S^n needs n >= 1")
    meta = SpaceMeta(n, is_suspension=True, notes={"is_suspension": "S^n is a suspension"})
    if n % 2:
        return _entry("S", (n,), f"S^{n}", sphere_presentation(n), meta, lambda r: [],
                      n - 1, "odd sphere: no even reduced cohomology", 0)
    if n in (2, 4):
        why = "S^2 = CP^1 and S^4 = HP^1 carry bundles whose top Chern class generates"
        exp = n
    else:
        meta.sphere_retract_dims = (n,)
        meta.notes["sphere_retract_dims"] = "identity of S^n"
        why = f"Bott integrality: c_{n // 2} is a multiple of {bott_divisor(n // 2)} times a generator"
        exp = n - 2
    return _entry("S", (n,), f"S^{n}", sphere_presentation(n), meta,
                  lambda r: [sphere_generator_bundle(r, "a", n, "γ")], exp, why, 1)


def sxs_expected(m: int, n: int) -> Tuple[int, str]:
    if m % 2 == 0 and n % 2 == 0:
        lo, hi = sorted((m, n))
        if lo == hi:
            return lo - 2, "H^m = Z^2 is not cyclic"
        if lo not in (2, 4) and hi not in (2, 4):
            return lo - 2, "restriction to S^m meets Bott integrality"
        if lo in (2, 4) and hi not in (2, 4):
            return hi - 2, "pullback from S^m gives m; restriction to S^n meets Bott integrality"
        return m + n, "Whitney sum of pullbacks from S^2 and S^4 has c_1 c_2 = ab"
    if m % 2 != n % 2:
        o, e = (m, n) if m % 2 else (n, m)
        if e not in (2, 4):
            return e - 2, "only even group is H^n; restriction to S^n meets Bott integrality"
        return o + e - 1, "pullback of the generator bundle from S^n"
    if m + n in (2, 4):
        return m + n, "degree-one collapse to S^{m+n}"
    if m % 8 == 3 and n % 8 == 3:
        return m + n - 2, "reduced KO-theory of S^m, S^n and S^{m+n} vanishes"
    if 1 in (m, n) and max(m, n) % 8 == 5:
        return max(m, n) - 1, "orientable real bundles over S^1 x S^n are stably trivial"
    raise UnsupportedParams(f"no known value for S^{m}xS^{n}")


def _pullback_sphere_bundles(r: GradedRing, spheres: Sequence[Tuple[str, int]]) -> List[Bundle]:
    out = [sphere_generator_bundle(r, g, d, f"p_{g}") for g, d in spheres]
    out = [b for b in out if b is not None]
    if len(out) == 2:
        out.append(whitney_sum(out[0], out[1], f"{out[0].label}+{out[1].label}"))
    return out


def _sxs(m, n):
    if m < 1 or n < 1:
        raise UnsupportedParams("sphere dimensions must be positive")
    exp, why = sxs_expected(m, n)
    pres = product_presentation(sphere_presentation(m, "a"), sphere_presentation(n, "b"),
                                f"S^{m}xS^{n}")
    meta = SpaceMeta(m + n)
    meta.sphere_retract_dims = tuple(sorted({d for d in (m, n) if d % 2 == 0}))
    meta.notes["sphere_retract_dims"] = "each factor is a retract"
    if m % 8 == 3 and n % 8 == 3:
        meta.product_k_trivial = True
        meta.notes["product_k_trivial"] = "reduced KO of S^m, S^n and S^m ^ S^n all vanish"

    def cands(r):
        out = _pullback_sphere_bundles(r, [("a", m), ("b", n)])
        if m % 2 and n % 2 and m + n in (2, 4):
            out.append(bundle(r, "f*γ", {(m + n) // 2: r.gen("a") * r.gen("b")},
                              f"pullback of the generator bundle along a degree-one map to S^{m + n}"))
        return out

    cup = 2 if m % 2 == 0 and n % 2 == 0 else None
    return _entry("SxS", (m, n), f"S^{m}xS^{n}", pres, meta, cands, exp, why, cup)


def svs_expected(m1: int, m2: int) -> Tuple[int, str]:
    if m1 % 2 == 0 and m2 % 2 == 0:
        lo, hi = sorted((m1, m2))
        if lo == hi:
            return lo - 2, "H^m = Z^2 is not cyclic"
        if lo not in (2, 4) and hi not in (2, 4):
            return lo - 2, "retraction to S^m1 meets Bott integrality"
        if lo == 2 and hi == 4:
            return hi, "restriction of the S^2 x S^4 Whitney sum bundle"
        return hi - 2, "pullback along the retraction to S^m1; retraction to S^m2 meets Bott"
    if m1 % 2 and m2 % 2:
        raise UnsupportedParams(f"no known value for S^{m1}vS^{m2}")
    o, e = (m1, m2) if m1 % 2 else (m2, m1)
    if e not in (2, 4):
        return e - 2, "only even group is H^m2; retraction to S^m2 meets Bott integrality"
    if o < e:
        return e, "pullback of the generator bundle along the retraction to S^m2"
    return o - 1, "pullback of the generator bundle along the retraction to S^m2"


def _svs(m1, m2):
    if m1 < 1 or m2 < 1:
        raise UnsupportedParams("sphere dimensions must be positive")
    exp, why = svs_expected(m1, m2)
    pres = wedge_presentation(sphere_presentation(m1, "a"), sphere_presentation(m2, "b"),
                              f"S^{m1}vS^{m2}")
    meta = SpaceMeta(max(m1, m2), is_suspension=True,
                     sphere_retract_dims=tuple(sorted({d for d in (m1, m2) if d % 2 == 0})),
                     notes={"is_suspension": "a wedge of spheres is a suspension",
                            "sphere_retract_dims": "each wedge summand is a retract"})
    return _entry("SvS", (m1, m2), f"S^{m1}vS^{m2}", pres, meta,
                  lambda r: _pullback_sphere_bundles(r, [("a", m1), ("b", m2)]), exp, why)


def _rp(n):
    if n < 1:
        raise UnsupportedParams("RP^n needs n >= 1")
    k = n // 2

    def cands(r):
        if k == 0:
            return []
        return [bundle(r, "ξ", {1: r.gen("α")},
                       "complex line bundle with c_1 the nonzero class of H^2 = Z/2")]

    cup = k if n % 2 == 0 else None
    return _entry("RP", (n,), f"RP^{n}", rp_presentation(n), SpaceMeta(n), cands, 2 * k,
                  "every even group is Z/2 generated by a power of c_1 of a line bundle", cup)


def _sxrp(m, n):
    if m < 1 or n < 1:
        raise UnsupportedParams("S^2m x RP^n needs m, n >= 1")
    k = n // 2
    if m == 2:
        exp, why = 2 * (m + k), "Whitney sum of the RP line bundle and the S^4 bundle"
    elif m == 1 and n == 1:
        exp, why = 2, "S^2 x S^1: pullback of the generator bundle from S^2"
    else:
        exp, why = 2 * (m - 1), ("H^2 = Z + Z/2 is not cyclic" if m == 1 else
                                 "restriction to S^2m meets Bott integrality")
    pres = product_presentation(rp_presentation(n), sphere_presentation(2 * m, "β"),
                                f"S^{2 * m}xRP^{n}")
    meta = SpaceMeta(2 * m + n, sphere_retract_dims=(2 * m,),
                     notes={"sphere_retract_dims": "the sphere factor is a retract"})

    def cands(r):
        out = []
        if k:
            out.append(bundle(r, "v", {1: r.gen("α")}, "pullback of the RP^n line bundle"))
        out.append(sphere_generator_bundle(r, "β", 2 * m, "η"))
        if len(out) == 2:
            out.append(whitney_sum(out[0], out[1], "v+η"))
        return out

    return _entry("SxRP", (m, n), f"S^{2 * m}xRP^{n}", pres, meta, cands, exp, why)


def _sxcp(m, n):
    if m < 1 or n < 1:
        raise UnsupportedParams("S^2m x CP^n needs m, n >= 1")
    if m == 2:
        exp, why = 2 * (m + n), "Whitney sum of L and the S^4 bundle"
    else:
        exp, why = 2 * (m - 1), ("H^2 = Z^2 is not cyclic" if m == 1 else
                                 "restriction to S^2m meets Bott integrality")
    pres = product_presentation(cp_presentation(n, "α"), sphere_presentation(2 * m, "β"),
                                f"S^{2 * m}xCP^{n}")
    meta = SpaceMeta(2 * m + 2 * n, sphere_retract_dims=(2 * m,),
                     notes={"sphere_retract_dims": "the sphere factor is a retract"})

    def cands(r):
        L = bundle(r, "L", {1: r.gen("α")}, "pullback of the canonical line bundle")
        eta = sphere_generator_bundle(r, "β", 2 * m, "η")
        return [L, eta, whitney_sum(L, eta, "L+η")]

    return _entry("SxCP", (m, n), f"S^{2 * m}xCP^{n}", pres, meta, cands, exp, why)


def _power_of_two_minus_one(x: int) -> bool:
    return x > 0 and (x + 1) & x == 0


def _stiefel(k, n):
    if not 1 < k < n:
        raise UnsupportedParams("V_k(C^n) needs 1 < k < n")
    if _power_of_two_minus_one(n - k):
        raise UnsupportedParams(f"no known value for V_{k}(C^{n}): n - k = {n - k} is 2^t - 1")
    degs = [2 * j - 1 for j in range(n - k + 1, n + 1)]
    pres = RingPresentation([G(f"x{d}", d) for d in degs], [], sum(degs), name=f"V_{k}(C^{n})")
    meta = SpaceMeta(sum(degs), sw_obstruction=True,
                     notes={"sw_obstruction": "H^*(V_k(C^n); Z) is exterior, so the first even "
                                              "generator reduces onto H^{r_X}(;Z/2) = Z/2"})
    cup = 1 if (k, n) == (2, 4) else None
    return _entry("V", (k, n), f"V_{k}(C^{n})", pres, meta, lambda r: [], 4 * (n - k) + 2,
                  "first nonzero Stiefel-Whitney class must sit in a power-of-two degree", cup)


def _stunted(n, m):
    if m < 1 or n < m + 2:
        raise UnsupportedParams("CP^n/CP^m needs m >= 1 and n >= m + 2")
    meta = SpaceMeta(2 * n)
    if m == 1:
        meta.sphere_retract_dims = (6,)
        meta.notes["sphere_retract_dims"] = (
            "CP^3/CP^1 is homotopy equivalent to S^4 v S^6 and includes into CP^n/CP^1 "
            "isomorphically through degree 6")
        exp, why = 4, "restriction to CP^3/CP^1 = S^4 v S^6 in reduced K-theory is onto"

        def cands(r):
            return [bundle(r, "ξ", {2: r.gen("u2")},
                           "restricts to the S^4 generator bundle on CP^3/CP^1")]
    else:
        meta.sphere_retract_dims = (2 * m + 2,)
        meta.notes["sphere_retract_dims"] = "the bottom cell S^{2m+2} carries H^{2m+2}"
        exp, why = 2 * m, "the bottom cell S^{2m+2} meets Bott integrality"

        def cands(r):
            return []
    return _entry("CP/CP", (n, m), f"CP^{n}/CP^{m}", stunted_cp_presentation(n, m), meta,
                  cands, exp, why)


FAMILIES: Dict[str, Callable[..., SpaceEntry]] = {
    "CP": _cp,
    "HP": _hp,
    "S": _sphere,
    "SxS": _sxs,
    "SvS": _svs,
    "RP": _rp,
    "SxRP": _sxrp,
    "SxCP": _sxcp,
    "V": _stiefel,
    "CP/CP": _stunted,
}

_NAME_PATTERNS = [
    (re.compile(r"^CP\^(\d+)/CP\^(\d+)$"), "CP/CP"),
    (re.compile(r"^CP\^(\d+)$"), "CP"),
    (re.compile(r"^HP\^(\d+)$"), "HP"),
    (re.compile(r"^RP\^(\d+)$"), "RP"),
    (re.compile(r"^S\^(\d+)xS\^(\d+)$"), "SxS"),
    (re.compile(r"^S\^(\d+)vS\^(\d+)$"), "SvS"),
    (re.compile(r"^S\^(\d+)xRP\^(\d+)$"), "SxRP"),
    (re.compile(r"^S\^(\d+)xCP\^(\d+)$"), "SxCP"),
    (re.compile(r"^S\^(\d+)$"), "S"),
    (re.compile(r"^V_(\d+)\(C\^(\d+)\)$"), "V"),
]


def space(family: str, *params: int) -> SpaceEntry:
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise UnsupportedParams(f"unknown family {family!r}") from None
    return builder(*params)


def lookup(name: str) -> SpaceEntry:
    """Build an entry from its display name, e.g. ``S^2xS^4`` or ``V_2(C^4)``."""
    compact = name.replace(" ", "")
    for pattern, family in _NAME_PATTERNS:
        m = pattern.match(compact)
        if m:
            params = [int(g) for g in m.groups()]
            if family in ("SxRP", "SxCP"):
                if params[0] % 2:
                    raise UnsupportedParams(f"{name}: sphere dimension must be even")
                params[0] //= 2
            return space(family, *params)
    raise UnsupportedParams(f"unrecognized space name {name!r}")


def default_parameters() -> Dict[str, List[Tuple[int, ...]]]:
    """The desk-scale parameter ranges of the regression suite."""
    def supported(check, pairs):
        out = []
        for p in pairs:
            try:
                check(*p)
            except UnsupportedParams:
                continue
            out.append(p)
        return out

    return {
        "CP": [(n,) for n in range(1, 9)],
        "HP": [(n,) for n in range(1, 5)],
        "S": [(n,) for n in (1, 3, 5, 7, 9, 2, 4, 6, 8, 10, 12)],
        "SxS": supported(sxs_expected, [(m, n) for m in range(1, 13) for n in range(m, 13)]),
        "SvS": supported(svs_expected, [(m, n) for m in range(1, 11) for n in range(m, 11)]),
        "RP": [(n,) for n in range(1, 11)],
        "SxRP": [(m, n) for m in range(1, 5) for n in range(1, 6)],
        "SxCP": [(m, n) for m in range(1, 5) for n in range(1, 5)],
        "V": [(k, n) for n in range(3, 7) for k in range(2, n)
              if not _power_of_two_minus_one(n - k)],
        "CP/CP": [(n, m) for m in range(1, 4) for n in range(m + 2, 7)],
    }


def entries(families: Optional[Dict[str, Sequence[Tuple[int, ...]]]] = None,
            max_param: Optional[int] = None) -> List[SpaceEntry]:
    families = default_parameters() if families is None else families
    out = []
    for family, plist in families.items():
        for params in plist:
            if max_param is not None and max(params) > max_param:
                continue
            out.append(space(family, *params))
    return out


# -- verification -----------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str


@dataclass
class Verdict:
    name: str
    expected: int
    report: RankReport
    status: str
    citation: str
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "lower": self.report.lower,
            "upper": self.report.upper,
            "status": self.status,
            "citation": self.citation,
            "lower_witness": self.report.lower_witness,
            "rules": [str(h) for h in self.report.rule_trace],
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in self.checks],
        }


def _side_checks(entry: SpaceEntry) -> List[Check]:
    ring, meta, dim = entry.ring, entry.meta, entry.dim
    checks = []
    ranks = {x.label: chernrank(x, dim) for x in entry.candidates}
    cup = None

    def cup_len():
        nonlocal cup
        if cup is None:
            cup = even_cup_length(ring, dim).length
        return cup

    if entry.expected_cup_e is not None:
        got = cup_len()
        checks.append(Check("even cup length", got == entry.expected_cup_e,
                            f"computed {got}, expected {entry.expected_cup_e}"))
    if dim % 2 == 0:
        full = [x for x in entry.candidates if ranks[x.label] == dim]
        if full:
            x = full[0]
            mono = chern_monomial_length(x, dim)
            checks.append(Check("cup length from Chern monomials", mono == cup_len(),
                                f"Cup_E = {cup_len()}, longest Chern monomial of {x.label} = {mono}"))
    d = meta.complex_dim
    if d is not None:
        try:
            gap = chernrank_gap_check(ring, d, entry.candidates)
        except PreconditionNotMet as exc:
            checks.append(Check("chern rank gap", True, f"not applicable: {exc}"))
        else:
            checks.append(Check("chern rank gap", gap.passed,
                                f"ranks {gap.ranks} avoid [{gap.forbidden[0]},{gap.forbidden[1]})"))
        rx = r_x(ring, dim)
        for x in entry.candidates:
            for k in range(1, ranks[x.label] // 2 + 1):
                if k >= d:
                    break
                try:
                    holds = cup_bound_hypothesis(x, k, d)
                except PreconditionNotMet:
                    break
                if holds:
                    bound = cup_length_bound(d, k, rx)
                    checks.append(Check("cup length bound", cup_len() <= bound,
                                        f"{x.label}, k={k}: Cup_E = {cup_len()} <= {bound}"))
    return checks


def verify(entry: SpaceEntry) -> Verdict:
    lower, witness = uchrank_lower(entry.candidates, entry.ring, entry.dim)
    upper, trace = uchrank_upper(entry.ring, entry.meta)
    report = RankReport(lower, upper, lower == upper, trace, witness)
    exp = entry.expected_uchrank
    if lower <= exp <= upper:
        status = DETERMINED if lower == upper else PAPER_ASSERTED
    else:
        status = FAIL
    checks = _side_checks(entry)
    if status != FAIL and not all(c.passed for c in checks):
        status = FAIL
    return Verdict(entry.name, exp, report, status, entry.citation, checks)


@dataclass
class Summary:
    verdicts: List[Verdict]

    @property
    def failures(self) -> int:
        return sum(1 for v in self.verdicts if not v.passed)

    @property
    def passes(self) -> int:
        return len(self.verdicts) - self.failures

    def count(self, status: str) -> int:
        return sum(1 for v in self.verdicts if v.status == status)


def verify_entries(items: Sequence[SpaceEntry], jobs: int = 1) -> Summary:
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return Summary(list(pool.map(verify, items)))
    return Summary([verify(e) for e in items])


def verify_all(families=None, max_param: Optional[int] = None,
               overrides: Optional[Dict[str, int]] = None, jobs: int = 1) -> Summary:
    """Verify every catalog entry; ``overrides`` replaces expected values by name."""
    items = entries(families, max_param)
    if overrides:
        unknown = set(overrides) - {e.name for e in items}
        if unknown:
            raise UnsupportedParams(f"no catalog entry named {sorted(unknown)}")
        items = [replace(e, expected_uchrank=overrides[e.name]) if e.name in overrides else e
                 for e in items]
    return verify_entries(items, jobs)


# -- ring maps between catalog entries --------------------------------------

def _map(src: SpaceEntry, dst: SpaceEntry, images: Dict[str, str], name: str) -> RingMap:
    t = dst.ring
    return RingMap(src.ring, t, {g: t.gen(h) for g, h in images.items()}, name)


def catalog_maps(items: Sequence[SpaceEntry]) -> List[RingMap]:
    """Induced maps f^*: H^*(Y) -> H^*(X) of natural maps X -> Y in the catalog.

    All are surjective: restrictions to factors, subspaces and wedges, plus
    the identity of every entry.
    """
    by_name = {e.name: e for e in items}
    maps = [identity_map(e.ring) for e in items]

    def add(src, dst, images, name):
        if src in by_name and dst in by_name:
            maps.append(_map(by_name[src], by_name[dst], images, name))

    for e in items:
        p = e.params
        if e.family == "CP":
            for j in range(1, p[0]):
                add(e.name, f"CP^{j}", {"α": "α"}, f"incl CP^{j}")
        elif e.family == "HP":
            for j in range(1, p[0]):
                add(e.name, f"HP^{j}", {"u": "u"}, f"incl HP^{j}")
        elif e.family == "RP":
            for j in range(2, p[0], 2):
                add(e.name, f"RP^{j}", {"α": "α"}, f"incl RP^{j}")
        elif e.family == "SxS":
            m, n = p
            add(e.name, f"S^{m}", {"a": "a"}, f"incl S^{m}")
            add(e.name, f"S^{n}", {"b": "a"}, f"incl S^{n}")
            add(e.name, f"S^{m}vS^{n}", {"a": "a", "b": "b"}, "incl wedge")
        elif e.family == "SxCP":
            m, n = p
            add(e.name, f"CP^{n}", {"α": "α"}, f"incl CP^{n}")
            add(e.name, f"S^{2 * m}", {"β": "a"}, f"incl S^{2 * m}")
        elif e.family == "SxRP":
            m, n = p
            images = {"α": "α"} if n > 1 else {"λ": "λ"}
            if n % 2 and n > 1:
                images["λ"] = "λ"
            add(e.name, f"RP^{n}", images, f"incl RP^{n}")
            add(e.name, f"S^{2 * m}", {"β": "a"}, f"incl S^{2 * m}")
        elif e.family == "CP/CP" and p[1] == 1 and p[0] > 3:
            add(e.name, "CP^3/CP^1", {"u2": "u2", "u3": "u3"}, "incl CP^3/CP^1")
    return maps
