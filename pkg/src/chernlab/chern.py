"""Formal complex bundles (total Chern classes) and their chern rank."""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .gring import GradedRing, RingElement, UnknownGenerator, r_x
from .zlattice import saturates


class BundleError(ValueError):
    pass


@dataclass(frozen=True)
class Bundle:
    """A formal total Chern class ``1 + c_1 + c_2 + ...`` over one ring.

    ``classes[i - 1]`` is ``c_i`` and must be zero or homogeneous of
    degree ``2i``.  Nothing is claimed about realizability; that belongs in
    ``justification``.
    """

    label: str
    ring: GradedRing
    classes: Tuple[RingElement, ...] = ()
    justification: str = ""

    def __post_init__(self):
        classes = tuple(self.classes)
        for i, c in enumerate(classes, start=1):
            if c.ring is not self.ring:
                raise BundleError(f"c_{i} of {self.label} lives over another ring")
            if c and c.degree != 2 * i:
                raise BundleError(
                    f"c_{i} of {self.label} must be homogeneous of degree {2 * i}, got {c}"
                )
        while classes and not classes[-1]:
            classes = classes[:-1]
        object.__setattr__(self, "classes", classes)

    def c(self, i: int) -> RingElement:
        if i == 0:
            return self.ring.one()
        if 1 <= i <= len(self.classes):
            return self.classes[i - 1]
        return self.ring.zero()

    def total(self) -> RingElement:
        out = self.ring.one()
        for c in self.classes:
            out = out + c
        return out

    def is_trivial(self) -> bool:
        return not self.classes

    def __str__(self):
        parts = [f"c{i}={c}" for i, c in enumerate(self.classes, start=1) if c]
        return f"{self.label}: " + (", ".join(parts) if parts else "c=1")


def bundle(ring: GradedRing, label: str, classes: Mapping[int, RingElement] = None,
           justification: str = "") -> Bundle:
    """Build a bundle from a sparse ``{i: c_i}`` mapping."""
    classes = dict(classes or {})
    top = max(classes, default=0)
    return Bundle(label, ring, tuple(classes.get(i, ring.zero()) for i in range(1, top + 1)),
                  justification)


def trivial(ring: GradedRing, label: str = "trivial") -> Bundle:
    return Bundle(label, ring, (), "product bundle, c = 1")


def from_total(ring: GradedRing, label: str, total: RingElement, justification: str = "") -> Bundle:
    if total.component(0) != ring.one():
        raise BundleError(f"total Chern class {total} does not start with 1")
    classes = {}
    for d in total.degrees():
        if d == 0:
            continue
        if d % 2:
            raise BundleError(f"total Chern class has an odd-degree component in degree {d}")
        classes[d // 2] = total.component(d)
    return bundle(ring, label, classes, justification)


def whitney_sum(x: Bundle, y: Bundle, label: Optional[str] = None) -> Bundle:
    if x.ring is not y.ring:
        raise BundleError("Whitney sum of bundles over different rings")
    return from_total(x.ring, label or f"{x.label}+{y.label}", x.total() * y.total(),
                      f"Whitney sum of {x.label} and {y.label}")


def conjugate(x: Bundle) -> Bundle:
    """c_k of the conjugate bundle is (-1)^k c_k."""
    return Bundle(f"conj({x.label})", x.ring,
                  tuple(-c if i % 2 else c for i, c in enumerate(x.classes, start=1)),
                  f"conjugate of {x.label}")


def dual(x: Bundle) -> Bundle:
    """The dual bundle is isomorphic to the conjugate one."""
    b = conjugate(x)
    return Bundle(f"dual({x.label})", b.ring, b.classes, f"dual of {x.label}")


class RingMap:
    """Degree-preserving ring homomorphism given on generators.

    Construction checks that every relation of the source, and every source
    monomial killed by truncation, maps to zero.
    """

    def __init__(self, source: GradedRing, target: GradedRing,
                 images: Mapping[str, RingElement], name: str = "f"):
        self.source = source
        self.target = target
        self.name = name
        self.images: Dict[str, RingElement] = {}
        for g in source.generators:
            img = images.get(g.name, target.zero())
            if img.ring is not target:
                raise BundleError(f"image of {g.name} is not in the target ring")
            if img and img.degree != g.degree:
                raise BundleError(
                    f"image of {g.name} has degree {img.degree}, expected {g.degree}"
                )
            self.images[g.name] = img
        for name in images:
            if name not in source.index:
                raise UnknownGenerator(name)
        if source.modulus and target.modulus and target.modulus % source.modulus:
            raise BundleError("coefficient rings are incompatible")
        self._cache: Dict[tuple, RingElement] = {}
        self._check_relations()

    def _image_of_monomial(self, m) -> RingElement:
        out = self._cache.get(m)
        if out is None:
            out = self.target.one()
            for name, e in zip(self.source.names, m):
                for _ in range(e):
                    out = out * self.images[name]
            self._cache[m] = out
        return out

    def _check_relations(self):
        src = self.source
        for lhs, rhs in src._rules:
            val = self._image_of_monomial(lhs)
            for m, c in rhs.items():
                val = val - self._image_of_monomial(m) * c
            if val:
                raise BundleError(f"{self.name} does not respect relation at {src.mono_str(lhs)}")
        for lhs, c in src._torsion:
            if self._image_of_monomial(lhs) * c:
                raise BundleError(f"{self.name} does not respect torsion at {src.mono_str(lhs)}")
        if src.modulus and self.target.one() * src.modulus:
            raise BundleError(f"{self.name}: target does not have characteristic {src.modulus}")
        top = self.target.max_degree
        if top > src.max_degree:
            for m in src._monomials_upto(top):
                if src.mono_degree(m) > src.max_degree and self._image_of_monomial(m):
                    raise BundleError(
                        f"{self.name} does not kill truncated monomial {src.mono_str(m)}"
                    )

    def __call__(self, e: RingElement) -> RingElement:
        if e.ring is not self.source:
            raise BundleError("element is not in the source ring")
        out = self.target.zero()
        for m, c in e.terms.items():
            out = out + self._image_of_monomial(m) * c
        return out

    def is_surjective(self) -> bool:
        for d in range(1, self.target.max_degree + 1):
            orders = self.target.orders[d]
            if not orders:
                continue
            gens = [self.target.coords(self(b), d) for b in self.source.basis_elements(d)]
            if not saturates(gens, orders):
                return False
        return True


def identity_map(ring: GradedRing) -> RingMap:
    return RingMap(ring, ring, {n: ring.gen(n) for n in ring.names}, "id")


def pullback(f: RingMap, x: Bundle) -> Bundle:
    if x.ring is not f.source:
        raise BundleError("bundle does not live over the source of the map")
    return Bundle(f"{f.name}*({x.label})", f.target, tuple(f(c) for c in x.classes),
                  f"pullback of {x.label} along {f.name}")


def partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, in lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, largest) + 1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def chern_monomial(x: Bundle, parts: Sequence[int]) -> RingElement:
    out = x.ring.one()
    for j in parts:
        out = out * x.c(j)
        if not out:
            break
    return out


def chern_subgroup(x: Bundle, degree: int) -> List[Tuple[int, ...]]:
    """Coordinates of every Chern monomial of total degree ``degree``."""
    if degree % 2:
        raise BundleError("Chern monomials live in even degrees")
    ring = x.ring
    return [ring.coords(chern_monomial(x, p), degree) for p in partitions(degree // 2)]


def saturates_degree(x: Bundle, degree: int) -> bool:
    orders = x.ring.orders.get(degree, ())
    if not orders:
        return True
    return saturates(chern_subgroup(x, degree), orders)


def chernrank(x: Bundle, dim: Optional[int] = None) -> int:
    """Largest even 2k <= dim with every class of degree <= 2k a polynomial
    in the Chern classes of ``x``."""
    dim = x.ring.max_degree if dim is None else dim
    for i in range(1, dim // 2 + 1):
        if not saturates_degree(x, 2 * i):
            return 2 * (i - 1)
    return dim if dim % 2 == 0 else dim - 1


def lower_bound_from_rx(ring: GradedRing, dim: Optional[int] = None) -> int:
    return r_x(ring, dim) - 2
