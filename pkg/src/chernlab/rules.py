"""Bounds on the upper chern rank of a space.

Lower bounds come from explicit candidate bundles.  Upper bounds come from
obstruction rules whose topological hypotheses are recorded as metadata
flags on the space; only their arithmetic side conditions (r_X, k_X,
cyclicity, powers of two) are checked here.
"""

from dataclasses import dataclass, field
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .chern import Bundle, chernrank
from .gring import GradedRing, is_cyclic, k_x, r_x
from .zlattice import invariant_factors


class InconsistentBounds(ValueError):
    pass


class PreconditionNotMet(ValueError):
    pass


@dataclass
class SpaceMeta:
    """Topological facts about a space that the ring alone cannot see.

    ``sphere_retract_dims`` lists even m for which some map S^m -> X induces
    an isomorphism on H^m that is split by a retraction, or otherwise lets a
    bundle on X restrict to one on S^m with the same top Chern class.
    ``sw_obstruction`` states that the generator of H^{r_X}(X; Z) reduces to
    a nonzero mod-2 class while every complex bundle has vanishing lower
    Stiefel-Whitney classes, so its first nonzero one must sit in a degree
    that is a power of two.  ``notes`` maps flag names to justifications.
    """

    dim: int
    is_suspension: bool = False
    k_reduced_trivial: bool = False
    sphere_retract_dims: Tuple[int, ...] = ()
    sw_obstruction: bool = False
    complex_dim: Optional[int] = None
    product_k_trivial: bool = False
    notes: Dict[str, str] = field(default_factory=dict)

    FLAGS = ("is_suspension", "k_reduced_trivial", "sphere_retract_dims", "sw_obstruction",
             "complex_dim", "product_k_trivial")


@dataclass(frozen=True)
class RuleHit:
    rule: str
    bound: int
    detail: str
    note: str = ""

    def __str__(self):
        return f"{self.rule}: <= {self.bound} ({self.detail})"


@dataclass
class RankReport:
    lower: int
    upper: int
    determined: bool
    rule_trace: List[RuleHit]
    lower_witness: str = ""

    def interval(self) -> str:
        return f"[{self.lower},{self.upper}]"


def ceiling(dim: int) -> int:
    return dim if dim % 2 == 0 else dim - 1


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def bott_divisor(n: int) -> int:
    """Over S^{2n} the class c_n of any bundle is a multiple of (n-1)! times a generator."""
    if n < 1:
        raise ValueError("n must be positive")
    return factorial(n - 1)


def uchrank_lower(candidates: Sequence[Bundle], ring: GradedRing,
                  dim: Optional[int] = None) -> Tuple[int, str]:
    """Best chern rank among the candidates and the trivial bundle."""
    dim = ring.max_degree if dim is None else dim
    best, witness = min(r_x(ring, dim) - 2, ceiling(dim)), "trivial"
    for x in candidates:
        if x.ring is not ring:
            raise ValueError(f"candidate {x.label} lives over another ring")
        cr = chernrank(x, dim)
        if cr > best:
            best, witness = cr, x.label
    return best, witness


def uchrank_upper(ring: GradedRing, meta: SpaceMeta) -> Tuple[int, List[RuleHit]]:
    dim = meta.dim
    rx = r_x(ring, dim)
    hits = [RuleHit("ceiling", ceiling(dim), f"dim = {dim}")]
    if rx <= dim and not is_cyclic(ring, rx):
        hits.append(RuleHit("R1 non-cyclic", rx - 2,
                            f"H^{rx} = {ring.group(rx)} is not cyclic"))
    if meta.is_suspension:
        hits.append(RuleHit("R2 suspension", k_x(ring, dim), f"k_X = {k_x(ring, dim)}",
                            meta.notes.get("is_suspension", "")))
    if meta.k_reduced_trivial:
        hits.append(RuleHit("R3 K-trivial", rx - 2, "reduced K-theory vanishes",
                            meta.notes.get("k_reduced_trivial", "")))
    for m in meta.sphere_retract_dims:
        if m % 2:
            raise ValueError(f"sphere retract dimension {m} is odd")
        n = m // 2
        if n not in (1, 2):
            hits.append(RuleHit("R4 Bott sphere", m - 2,
                                f"restriction to S^{m}: c_{n} divisible by {bott_divisor(n)}",
                                meta.notes.get("sphere_retract_dims", "")))
    if meta.sw_obstruction and rx <= dim and not is_power_of_two(rx):
        hits.append(RuleHit("R5 power of two", rx - 2, f"r_X = {rx} is not a power of 2",
                            meta.notes.get("sw_obstruction", "")))
    if meta.product_k_trivial:
        below = dim - 2 if dim % 2 == 0 else dim - 1
        hits.append(RuleHit("R6 product K-trivial", below, "uchrank < dim",
                            meta.notes.get("product_k_trivial", "")))
    return min(h.bound for h in hits), hits


def combine(lower: int, upper: int, trace: Sequence[RuleHit] = (), witness: str = "") -> RankReport:
    if lower > upper:
        raise InconsistentBounds(f"lower bound {lower} exceeds upper bound {upper}")
    return RankReport(lower, upper, lower == upper, list(trace), witness)


def rank_report(candidates: Sequence[Bundle], ring: GradedRing, meta: SpaceMeta) -> RankReport:
    lower, witness = uchrank_lower(candidates, ring, meta.dim)
    upper, trace = uchrank_upper(ring, meta)
    return combine(lower, upper, trace, witness)


@dataclass
class GapReport:
    passed: bool
    forbidden: Tuple[int, int]
    ranks: Dict[str, int]
    violations: List[str]


def gap_check(ranks: Dict[str, int], complex_dim: int, rx: int) -> GapReport:
    """Every chern rank must lie below 2d - r_X or equal 2d."""
    lo, hi = 2 * complex_dim - rx, 2 * complex_dim
    bad = [label for label, cr in ranks.items() if lo <= cr < hi]
    return GapReport(not bad, (lo, hi), dict(ranks), bad)


def chernrank_gap_check(ring: GradedRing, complex_dim: int,
                        candidates: Sequence[Bundle]) -> GapReport:
    """Chern ranks on a closed complex d-fold whose first even group H^{r_X}
    is Z with r_X <= d avoid the interval [2d - r_X, 2d)."""
    rx = r_x(ring, 2 * complex_dim)
    if rx > complex_dim:
        raise PreconditionNotMet(f"r_X = {rx} exceeds the complex dimension {complex_dim}")
    if invariant_factors(ring.orders[rx]) != [0]:
        raise PreconditionNotMet(f"H^{rx} = {ring.group(rx)} is not Z")
    ranks = {x.label: chernrank(x, 2 * complex_dim) for x in candidates}
    return gap_check(ranks, complex_dim, rx)
