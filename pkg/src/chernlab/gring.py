"""Finitely presented graded-commutative rings over Z or Z/p.

A presentation lists generators with positive degrees and oriented
relations ``c * lhs -> rhs``.  Compiling it enumerates every monomial up to
the truncation degree, rewrites it to normal form and records the normal
monomials of each degree together with their additive orders.

Monomials are exponent tuples indexed by generator declaration order.  The
product of two ordered monomials carries the Koszul sign: every odd
generator of the right factor that moves left past an odd generator of the
left factor contributes a factor -1.  Monomials are compared by (degree,
word length, exponents lexicographically); rewriting always decreases this
order, which guarantees termination.
"""

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .zlattice import FGGroup, invariant_factors

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, int]


class NonAdmissiblePresentation(ValueError):
    pass


class NonConfluent(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownGenerator(KeyError):
    def __str__(self):
        return f"unknown generator {self.args[0]!r}"


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int


@dataclass(frozen=True)
class Relation:
    """``coefficient * lhs = rhs``.

    ``lhs`` maps generator names to exponents.  ``rhs`` is a list of
    ``(coefficient, {name: exponent})`` terms read in declaration order.  A
    coefficient above 1 encodes torsion and then ``rhs`` must be empty.
    """

    lhs: Mapping[str, int]
    rhs: Sequence[Tuple[int, Mapping[str, int]]] = ()
    coefficient: int = 1
    note: str = ""


@dataclass
class RingPresentation:
    generators: List[Generator]
    relations: List[Relation]
    max_degree: int
    modulus: int = 0  # 0 for Z, p for Z/p
    name: str = ""
    default_odd_squares: bool = True


@dataclass
class TablePresentation:
    """A ring given by an additive basis of positive-degree classes and a
    multiplication table; the unit is adjoined.

    ``products[(x, y)]`` is a list of ``(coefficient, name)`` pairs; missing
    pairs multiply to zero.  Products are read in the order ``x * y`` with
    ``x`` declared no later than ``y``.
    """

    basis: List[Generator]
    products: Dict[Tuple[str, str], List[Tuple[int, str]]]
    max_degree: int
    orders: Dict[str, int] = field(default_factory=dict)
    modulus: int = 0
    name: str = ""

    def to_presentation(self) -> RingPresentation:
        index = {g.name: i for i, g in enumerate(self.basis)}
        rels = []
        for x, y in combinations_with_replacement([g.name for g in self.basis], 2):
            lhs = {x: 2} if x == y else {x: 1, y: 1}
            rhs = self.products.get((x, y))
            if rhs is None and (y, x) in self.products and x != y:
                raise NonAdmissiblePresentation(
                    f"table entry ({y}, {x}) must be given as ({x}, {y})"
                )
            rels.append(Relation(lhs, [(c, {n: 1}) for c, n in (rhs or [])]))
        for name, order in self.orders.items():
            if name not in index:
                raise UnknownGenerator(name)
            if order:
                rels.append(Relation({name: 1}, (), order))
        return RingPresentation(list(self.basis), rels, self.max_degree, self.modulus, self.name,
                                default_odd_squares=False)


def _mono_mul(u: Monomial, v: Monomial, odd: Sequence[bool]) -> Tuple[int, Monomial]:
    swaps = 0
    later_odd = 0  # odd exponent mass of u strictly after position i
    for i in range(len(u) - 1, -1, -1):
        if odd[i]:
            swaps += v[i] * later_odd
            later_odd += u[i]
    w = tuple(a + b for a, b in zip(u, v))
    return (-1 if swaps & 1 else 1), w


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


class GradedRing:
    """Compiled graded-commutative ring, truncated above ``max_degree``."""

    def __init__(self, presentation: RingPresentation):
        p = presentation
        self.name = p.name
        self.presentation = p
        self.max_degree = int(p.max_degree)
        self.modulus = int(p.modulus)
        self.provenance: List[str] = []
        names = [g.name for g in p.generators]
        if len(set(names)) != len(names):
            raise NonAdmissiblePresentation("duplicate generator names")
        for g in p.generators:
            if g.degree < 1:
                raise NonAdmissiblePresentation(f"generator {g.name} has degree {g.degree} < 1")
        if self.modulus < 0 or self.modulus == 1:
            raise NonAdmissiblePresentation(f"invalid coefficient modulus {self.modulus}")
        self.generators = list(p.generators)
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        self.degrees = tuple(g.degree for g in p.generators)
        self.odd = tuple(d % 2 == 1 for d in self.degrees)
        self._rules: List[Tuple[Monomial, Terms]] = []
        self._torsion: List[Tuple[Monomial, int]] = []
        for rel in p.relations:
            self._add_relation(rel)
        n = len(names)
        for i in range(n):
            if not self.odd[i]:
                continue
            sq = tuple(2 if k == i else 0 for k in range(n))
            if not any(lhs == sq for lhs, _ in self._rules):
                if not p.default_odd_squares:
                    raise NonAdmissiblePresentation(
                        f"odd generator {names[i]} has no square relation"
                    )
                self._rules.append((sq, {}))
                self.provenance.append(f"default {names[i]}^2 = 0 for odd generator {names[i]}")
        self._nf_cache: Dict[Monomial, Terms] = {}
        self._prod_cache: Dict[Tuple[Monomial, Monomial], Terms] = {}
        self._check_confluence()
        self._build_basis()

    # -- construction -----------------------------------------------------

    def _mono(self, spec: Mapping[str, int]) -> Monomial:
        exps = [0] * len(self.names)
        for name, e in spec.items():
            if name not in self.index:
                raise UnknownGenerator(name)
            if e < 0:
                raise NonAdmissiblePresentation(f"negative exponent on {name}")
            exps[self.index[name]] += int(e)
        return tuple(exps)

    def mono_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def order_key(self, m: Monomial):
        return (self.mono_degree(m), sum(m), m)

    def _add_relation(self, rel: Relation):
        lhs = self._mono(rel.lhs)
        c = int(rel.coefficient)
        if sum(lhs) == 0:
            raise NonAdmissiblePresentation("relation with constant left-hand side")
        if c < 1:
            raise NonAdmissiblePresentation(f"relation coefficient {c} must be positive")
        rhs: Terms = {}
        for coef, spec in rel.rhs:
            m = self._mono(spec)
            rhs[m] = rhs.get(m, 0) + int(coef)
        rhs = {m: v for m, v in rhs.items() if v}
        deg = self.mono_degree(lhs)
        key = self.order_key(lhs)
        for m in rhs:
            if self.mono_degree(m) != deg:
                raise NonAdmissiblePresentation(
                    f"inhomogeneous relation at {self.mono_str(lhs)}"
                )
            if self.order_key(m) >= key:
                raise NonAdmissiblePresentation(
                    f"order-increasing relation: {self.mono_str(m)} is not below {self.mono_str(lhs)}"
                )
        if c == 1:
            self._rules.append((lhs, rhs))
        elif rhs:
            raise NonAdmissiblePresentation(
                f"torsion relation {c}*{self.mono_str(lhs)} must have zero right-hand side"
            )
        else:
            self._torsion.append((lhs, c))

    def _monomials_upto(self, degree: int) -> List[Monomial]:
        out = []
        n = len(self.degrees)

        def rec(i, prefix, remaining):
            if i == n:
                out.append(tuple(prefix))
                return
            e = 0
            while e * self.degrees[i] <= remaining:
                rec(i + 1, prefix + [e], remaining - e * self.degrees[i])
                e += 1

        rec(0, [], degree)
        out.sort(key=self.order_key)
        return out

    # -- normal forms -----------------------------------------------------

    def _first_rule(self, m: Monomial):
        for lhs, rhs in self._rules:
            if _divides(lhs, m):
                return lhs, rhs
        return None

    def _rewrite(self, m: Monomial, rule) -> Terms:
        """One rewriting step on the monomial ``m`` with ``rule``."""
        lhs, rhs = rule
        u = tuple(a - b for a, b in zip(m, lhs))
        sign, _ = _mono_mul(u, lhs, self.odd)
        out: Terms = {}
        for r, c in rhs.items():
            s2, w = _mono_mul(u, r, self.odd)
            out[w] = out.get(w, 0) + sign * s2 * c
        return out

    def monomial_modulus(self, m: Monomial) -> int:
        return reduce(gcd, (c for lhs, c in self._torsion if _divides(lhs, m)), self.modulus)

    def _nf_monomial(self, m: Monomial) -> Terms:
        cached = self._nf_cache.get(m)
        if cached is not None:
            return cached
        if self.mono_degree(m) > self.max_degree:
            out: Terms = {}
        else:
            rule = self._first_rule(m)
            if rule is None:
                out = {m: 1}
            else:
                out = {}
                for w, c in self._rewrite(m, rule).items():
                    for v, d in self._nf_monomial(w).items():
                        out[v] = out.get(v, 0) + c * d
        self._nf_cache[m] = out
        return out

    def _reduce_coefficients(self, terms: Terms) -> Terms:
        out = {}
        for m, c in terms.items():
            mod = self.monomial_modulus(m)
            if mod == 1:
                continue
            if mod:
                c %= mod
            if c:
                out[m] = c
        return out

    def normal_form(self, terms: Mapping[Monomial, int]) -> Terms:
        acc: Terms = {}
        for m, c in terms.items():
            if not c:
                continue
            for v, d in self._nf_monomial(m).items():
                acc[v] = acc.get(v, 0) + c * d
        return self._reduce_coefficients(acc)

    def _check_confluence(self):
        zero = tuple(0 for _ in self.names)
        for m in self._monomials_upto(self.max_degree):
            if m == zero:
                continue
            rules = [r for r in self._rules if _divides(r[0], m)]
            tors = [c for lhs, c in self._torsion if _divides(lhs, m)]
            if not rules and len(tors) < 2:
                continue
            coefficients = {1, *tors}
            if self.modulus:
                coefficients.add(self.modulus)
            for a in sorted(coefficients):
                expected = self.normal_form({m: a})
                for rule in rules:
                    step = {w: a * c for w, c in self._rewrite(m, rule).items()}
                    if self.normal_form(step) != expected:
                        raise NonConfluent(
                            f"rewriting {a}*{self.mono_str(m)} is not confluent", self.mono_str(m)
                        )
                for c in tors:
                    if self.normal_form({m: a % c}) != expected:
                        raise NonConfluent(
                            f"torsion reduction of {a}*{self.mono_str(m)} is not confluent",
                            self.mono_str(m),
                        )

    def _build_basis(self):
        self.basis: Dict[int, List[Monomial]] = {d: [] for d in range(self.max_degree + 1)}
        self.orders: Dict[int, Tuple[int, ...]] = {}
        for m in self._monomials_upto(self.max_degree):
            if self._first_rule(m) is None and self.monomial_modulus(m) != 1:
                self.basis[self.mono_degree(m)].append(m)
        for d, ms in self.basis.items():
            self.orders[d] = tuple(self.monomial_modulus(m) for m in ms)

    # -- element API --------------------------------------------------------

    def element(self, terms: Mapping[Monomial, int]) -> "RingElement":
        return RingElement(self, self.normal_form(terms))

    def monomial(self, spec: Mapping[str, int], coefficient: int = 1) -> "RingElement":
        return self.element({self._mono(spec): coefficient})

    def gen(self, name: str) -> "RingElement":
        if name not in self.index:
            raise UnknownGenerator(name)
        return self.monomial({name: 1})

    def one(self) -> "RingElement":
        return self.element({tuple(0 for _ in self.names): 1})

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def scalar(self, c: int) -> "RingElement":
        return self.element({tuple(0 for _ in self.names): c})

    def normalize(self, e: "RingElement") -> "RingElement":
        self._check_owner(e)
        return self.element(e.terms)

    def _mono_product(self, u: Monomial, v: Monomial) -> Terms:
        key = (u, v)
        cached = self._prod_cache.get(key)
        if cached is None:
            if self.mono_degree(u) + self.mono_degree(v) > self.max_degree:
                cached = {}
            else:
                s, w = _mono_mul(u, v, self.odd)
                cached = {m: s * c for m, c in self._nf_monomial(w).items()}
            self._prod_cache[key] = cached
        return cached

    def multiply(self, a: "RingElement", b: "RingElement") -> "RingElement":
        self._check_owner(a)
        self._check_owner(b)
        acc: Terms = {}
        for u, x in a.terms.items():
            for v, y in b.terms.items():
                for w, c in self._mono_product(u, v).items():
                    acc[w] = acc.get(w, 0) + x * y * c
        return RingElement(self, self._reduce_coefficients(acc))

    def _check_owner(self, e):
        if e.ring is not self:
            raise ValueError("element belongs to a different ring")

    # -- groups -----------------------------------------------------------

    def group(self, degree: int) -> FGGroup:
        if degree < 0 or degree > self.max_degree:
            return FGGroup(())
        return FGGroup(self.orders[degree])

    def rank(self, degree: int) -> int:
        return len(self.basis.get(degree, []))

    def basis_elements(self, degree: int) -> List["RingElement"]:
        return [RingElement(self, {m: 1}) for m in self.basis.get(degree, [])]

    def coords(self, e: "RingElement", degree: int) -> Tuple[int, ...]:
        """Coordinates of the degree-``degree`` component of ``e`` in the basis."""
        self._check_owner(e)
        return tuple(e.terms.get(m, 0) for m in self.basis.get(degree, []))

    def from_coords(self, coords: Sequence[int], degree: int) -> "RingElement":
        return self.element(dict(zip(self.basis[degree], coords)))

    # -- display / comparison -----------------------------------------------

    def mono_str(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def structure(self):
        """Hashable description: bases, orders and products of basis pairs."""
        bases = tuple(
            (d, tuple(self.mono_str(m) for m in self.basis[d]), self.orders[d])
            for d in range(self.max_degree + 1)
        )
        allm = [m for d in range(self.max_degree + 1) for m in self.basis[d]]
        table = []
        for u in allm:
            for v in allm:
                prod = self._reduce_coefficients(self._mono_product(u, v))
                table.append(tuple(sorted((self.mono_str(w), c) for w, c in prod.items())))
        return (self.modulus, bases, tuple(table))

    def describe(self) -> str:
        lines = []
        for d in range(self.max_degree + 1):
            if self.basis[d]:
                cells = ", ".join(
                    f"{self.mono_str(m)}" + ("" if o == 0 else f" (order {o})")
                    for m, o in zip(self.basis[d], self.orders[d])
                )
                lines.append(f"H^{d} = {self.group(d)}  [{cells}]")
        return "\n".join(lines)

    def __repr__(self):
        return f"GradedRing({self.name or '?'}, max_degree={self.max_degree})"


class RingElement:
    """Normalized integer combination of normal monomials of one ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedRing, terms: Terms):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError("elements of different rings")
            return other
        if isinstance(other, int):
            return self.ring.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return RingElement(self.ring, self.ring._reduce_coefficients(acc))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, self.ring._reduce_coefficients({m: -c for m, c in self.terms.items()}))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.ring, self.ring._reduce_coefficients(
                {m: c * other for m, c in self.terms.items()}))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> List[int]:
        return sorted({self.ring.mono_degree(m) for m in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> Optional[int]:
        """Degree of a nonzero homogeneous element, else None."""
        ds = self.degrees()
        return ds[0] if len(ds) == 1 else None

    def component(self, degree: int) -> "RingElement":
        return RingElement(self.ring, {m: c for m, c in self.terms.items()
                                       if self.ring.mono_degree(m) == degree})

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for m in sorted(self.terms, key=self.ring.order_key, reverse=True):
            c = self.terms[m]
            body = self.ring.mono_str(m)
            if body == "1":
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = body
            else:
                piece = f"{abs(c)}*{body}"
            if not out:
                out = piece if c > 0 else f"-{piece}"
            else:
                out += f" + {piece}" if c > 0 else f" - {piece}"
        return out

    def __repr__(self):
        return f"RingElement({self})"


def compile_presentation(p) -> GradedRing:
    if isinstance(p, TablePresentation):
        ring = GradedRing(p.to_presentation())
        _check_table_associativity(p, ring)
        return ring
    return GradedRing(p)


def _check_table_associativity(p: TablePresentation, ring: GradedRing):
    gens = [ring.gen(g.name) for g in p.basis]

    def table_mul(x: RingElement, y: RingElement) -> RingElement:
        # multiply through the table entries only
        acc = ring.zero()
        for u, a in x.terms.items():
            for v, b in y.terms.items():
                if sum(u) == 0 or sum(v) == 0:
                    acc = acc + ring.element({tuple(i + j for i, j in zip(u, v)): a * b})
                    continue
                i, j = u.index(1), v.index(1)
                if i <= j:
                    rhs = p.products.get((ring.names[i], ring.names[j]), [])
                    sign = 1
                else:
                    rhs = p.products.get((ring.names[j], ring.names[i]), [])
                    sign = -1 if ring.odd[i] and ring.odd[j] else 1
                for c, name in rhs:
                    acc = acc + ring.gen(name) * (sign * a * b * c)
        return acc

    for x in gens:
        for y in gens:
            for z in gens:
                if table_mul(table_mul(x, y), z) != table_mul(x, table_mul(y, z)):
                    raise NonConfluent(
                        f"multiplication table is not associative at ({x}, {y}, {z})",
                        f"{x}*{y}*{z}",
                    )


def normalize(e: RingElement, r: GradedRing) -> RingElement:
    return r.normalize(e)


def multiply(a: RingElement, b: RingElement, r: GradedRing) -> RingElement:
    return r.multiply(a, b)


def is_cyclic(r: GradedRing, degree: int) -> bool:
    return len(invariant_factors(r.orders.get(degree, ()))) <= 1


def r_x(r: GradedRing, dim: Optional[int] = None) -> int:
    """Smallest even degree >= 2 with nonzero cohomology.

    Without one, dim + 2 for even dim and dim + 1 for odd dim.
    """
    dim = r.max_degree if dim is None else dim
    for i in range(2, min(dim, r.max_degree) + 1, 2):
        if r.basis[i]:
            return i
    return dim + 2 if dim % 2 == 0 else dim + 1


def k_x(r: GradedRing, dim: Optional[int] = None) -> int:
    """Largest even 2k <= dim with every even piece up to 2k cyclic."""
    dim = r.max_degree if dim is None else dim
    best = 0
    for i in range(0, dim + 1, 2):
        if not is_cyclic(r, i):
            break
        best = i
    return best


def ambient_monomials(r: GradedRing, degree: int) -> List[Monomial]:
    """All monomials of exactly ``degree`` in the free ambient algebra."""
    return [m for m in r._monomials_upto(degree) if r.mono_degree(m) == degree]


def iter_basis(r: GradedRing, degrees: Iterable[int]):
    for d in degrees:
        for m in r.basis.get(d, []):
            yield d, m
