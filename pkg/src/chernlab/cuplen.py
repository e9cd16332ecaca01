"""Even cup length and related bounds."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .chern import Bundle, chernrank, partitions, chern_monomial
from .gring import GradedRing, RingElement
from .rules import PreconditionNotMet


@dataclass
class CupReport:
    length: int
    witness: List[RingElement]

    def __str__(self):
        return f"{self.length} ({' * '.join(str(w) for w in self.witness) or 'empty'})"


def _longest_product(factors: List[Tuple[int, RingElement]], one: RingElement, dim: int):
    """Longest nonzero product of factors taken with repetition.

    ``factors`` are (degree, element) pairs, already sorted; the search keeps
    indices non-decreasing, so the first maximal sequence found is the
    lexicographically first one.
    """
    best: List[int] = []

    def dfs(start, prod, degree, chosen):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for i in range(start, len(factors)):
            d, f = factors[i]
            if degree + d > dim:
                continue
            nxt = prod * f
            if not nxt:
                continue
            chosen.append(i)
            dfs(i, nxt, degree + d, chosen)
            chosen.pop()

    dfs(0, one, 0, [])
    return best


def even_cup_length(ring: GradedRing, dim: Optional[int] = None) -> CupReport:
    """Largest t with a nonzero product of t even classes of degree >= 2.

    Products are multilinear, so searching over basis monomials suffices.
    Even-degree classes commute, so only non-decreasing sequences are tried.
    """
    dim = ring.max_degree if dim is None else dim
    factors = [(d, b) for d in range(2, dim + 1, 2) for b in ring.basis_elements(d)]
    best = _longest_product(factors, ring.one(), dim)
    return CupReport(len(best), [factors[i][1] for i in best])


def chern_monomial_length(x: Bundle, dim: Optional[int] = None) -> int:
    """Longest nonzero product c_{i_1} ... c_{i_k} with every i_j >= 1."""
    dim = x.ring.max_degree if dim is None else dim
    factors = [(2 * i, c) for i, c in enumerate(x.classes, start=1) if c]
    return len(_longest_product(factors, x.ring.one(), dim))


def cup_bound_hypothesis(x: Bundle, k: int, complex_dim: int) -> bool:
    """Whether every monomial in c_1, ..., c_k of total degree 2d vanishes.

    Requires 1 <= k with 2k <= chernrank(x).  Even groups must be free.
    """
    ring = x.ring
    d = complex_dim
    if k < 1:
        raise PreconditionNotMet("k must be at least 1")
    cr = chernrank(x, 2 * d)
    if 2 * k > cr:
        raise PreconditionNotMet(f"2k = {2 * k} exceeds chernrank {cr}")
    for deg in range(0, ring.max_degree + 1, 2):
        if any(o != 0 for o in ring.orders[deg]):
            raise PreconditionNotMet(f"H^{deg} = {ring.group(deg)} has torsion")
    return all(not chern_monomial(x, p) for p in partitions(d, k))


def cup_length_bound(d: int, k: int, rx: int) -> Fraction:
    """Upper bound 1 + 2(d - k - 1)/r_X on the even cup length."""
    if not (d > k >= 1) or rx < 2:
        raise ValueError(f"invalid parameters d={d}, k={k}, r_X={rx}")
    return 1 + Fraction(2 * (d - k - 1), rx)
