"""Line-oriented text format for rings, bundles and space flags.

::

    # real projective 4-space
    space RP^4 dim 4 coeff Z
    gen α deg 2
    rel 2*α = 0
    rel α^3 = 0
    bundle L
    c1 = α
    flag is_suspension = false

A ring may instead be given in table form, by ``basis NAME deg D`` lines,
``mul X Y = EXPR`` products (X declared no later than Y) and optional
``order NAME N`` torsion.  Expressions are integer polynomials built from
``+ - * ^`` and parentheses.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .chern import Bundle, bundle
from .gring import (Generator, GradedRing, NonAdmissiblePresentation, Relation,
                    RingPresentation, TablePresentation, _mono_mul, compile_presentation)
from .rules import SpaceMeta


class DslError(ValueError):
    def __init__(self, message, line=0, col=0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self):
        return f"line {self.line}, col {self.col}: {self.message}"


class ParseError(DslError):
    pass


class DegreeError(DslError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[^\W\d]\w*)|(?P<op>[-+*^()]))")


def _tokenize(text: str, line: int, offset: int):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = offset + pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", line, col)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), offset + start + 1))
        pos = m.end()
    out.append(("end", "", offset + len(text) + 1))
    return out


class _ExprParser:
    """Recursive descent over ``expr := term (('+'|'-') term)*``,
    ``term := factor ('*' factor)*``, ``factor := atom ('^' INT)?``,
    ``atom := INT | NAME | '(' expr ')'``, with an optional leading sign."""

    def __init__(self, algebra, text, line, offset):
        self.alg = algebra
        self.tokens = _tokenize(text, line, offset)
        self.i = 0
        self.line = line

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok[2])

    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        value = self.alg.scale(self.term(), sign)
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = self.alg.add(value, rhs if op == "+" else self.alg.scale(rhs, -1))
        return value

    def term(self):
        value = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value = self.alg.mul(value, self.factor())
        return value

    def factor(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("exponent must be a non-negative integer", tok)
            out = self.alg.one()
            for _ in range(int(tok[1])):
                out = self.alg.mul(out, base)
            return out
        return base

    def atom(self):
        tok = self.take()
        kind, text, col = tok
        if kind == "int":
            return self.alg.const(int(text))
        if kind == "name":
            if text not in self.alg.index:
                raise ParseError(f"unknown generator {text!r}", self.line, col)
            return self.alg.gen(text)
        if tok[:2] == ("op", "("):
            value = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.error("expected ')'", close)
            return value
        raise self.error(f"unexpected {text or 'end of line'!r}", tok)


class _FreeAlgebra:
    """Free graded-commutative polynomials as {exponent tuple: coefficient}."""

    def __init__(self, gens: List[Generator]):
        self.names = [g.name for g in gens]
        self.index = {n: i for i, n in enumerate(self.names)}
        self.degrees = [g.degree for g in gens]
        self.odd = [d % 2 == 1 for d in self.degrees]

    def one(self):
        return self.const(1)

    def const(self, c):
        return {tuple(0 for _ in self.names): c} if c else {}

    def gen(self, name):
        i = self.index[name]
        return {tuple(int(k == i) for k in range(len(self.names))): 1}

    def scale(self, p, c):
        return {m: v * c for m, v in p.items() if v * c}

    def add(self, p, q):
        out = dict(p)
        for m, v in q.items():
            out[m] = out.get(m, 0) + v
        return {m: v for m, v in out.items() if v}

    def mul(self, p, q):
        out = {}
        for u, a in p.items():
            for v, b in q.items():
                s, w = _mono_mul(u, v, self.odd)
                out[w] = out.get(w, 0) + s * a * b
        return {m: v for m, v in out.items() if v}

    def degree(self, m):
        return sum(e * d for e, d in zip(m, self.degrees))

    def spec(self, m):
        return {n: e for n, e in zip(self.names, m) if e}

    def key(self, m):
        return (self.degree(m), sum(m), m)


@dataclass
class BundleSpec:
    label: str
    line: int
    classes: Dict[int, Dict[tuple, int]] = field(default_factory=dict)


@dataclass
class DslDocument:
    name: str = ""
    dim: int = 0
    modulus: int = 0
    generators: List[Generator] = field(default_factory=list)
    relations: List[Relation] = field(default_factory=list)
    table_basis: List[Generator] = field(default_factory=list)
    products: Dict[Tuple[str, str], List[Tuple[int, str]]] = field(default_factory=dict)
    orders: Dict[str, int] = field(default_factory=dict)
    bundles: List[BundleSpec] = field(default_factory=list)
    flags: Dict[str, object] = field(default_factory=dict)
    _ring: Optional[GradedRing] = field(default=None, repr=False)

    @property
    def is_table(self) -> bool:
        return bool(self.table_basis)

    def presentation(self):
        if self.is_table:
            return TablePresentation(list(self.table_basis), dict(self.products), self.dim,
                                     dict(self.orders), self.modulus, self.name)
        return RingPresentation(list(self.generators), list(self.relations), self.dim,
                                self.modulus, self.name)

    def ring(self) -> GradedRing:
        if self._ring is None:
            self._ring = compile_presentation(self.presentation())
        return self._ring

    def bundle_objects(self) -> List[Bundle]:
        ring = self.ring()
        out = []
        for spec in self.bundles:
            classes = {i: ring.element(p) for i, p in spec.classes.items()}
            out.append(bundle(ring, spec.label, classes, f"declared on line {spec.line}"))
        return out

    def get_bundle(self, label: str) -> Bundle:
        for b in self.bundle_objects():
            if b.label == label:
                return b
        raise KeyError(label)

    def meta(self) -> SpaceMeta:
        meta = SpaceMeta(self.dim)
        for k, v in self.flags.items():
            setattr(meta, k, v)
        return meta


_FLAG_TYPES = {
    "is_suspension": bool,
    "k_reduced_trivial": bool,
    "sw_obstruction": bool,
    "product_k_trivial": bool,
    "sphere_retract_dims": tuple,
    "complex_dim": int,
}


def _flag_value(key, raw, line, col):
    kind = _FLAG_TYPES[key]
    raw = raw.strip()
    try:
        if kind is bool:
            if raw.lower() not in ("true", "false"):
                raise ValueError
            return raw.lower() == "true"
        if kind is int:
            return None if raw.lower() == "none" else int(raw)
        items = raw.strip("[]").replace(",", " ").split()
        return tuple(int(x) for x in items)
    except ValueError:
        raise ParseError(f"bad value {raw!r} for flag {key}", line, col) from None


def parse(text: str) -> DslDocument:
    doc = DslDocument()
    seen_space = False
    current: Optional[BundleSpec] = None
    algebra = None

    def free_algebra():
        nonlocal algebra
        gens = doc.table_basis or doc.generators
        if algebra is None or len(algebra.names) != len(gens):
            algebra = _FreeAlgebra(gens)
        return algebra

    def expr(src, lineno, offset):
        return _ExprParser(free_algebra(), src, lineno, offset).parse()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        words = line.split()
        head = words[0]
        col = indent + 1

        def need(cond, msg, c=col):
            if not cond:
                raise ParseError(msg, lineno, c)

        if head != "space" and not seen_space:
            raise ParseError("document must start with a 'space' line", lineno, col)
        if re.fullmatch(r"c\d+", head):
            need(current is not None, f"{head} outside a bundle block")
            i = int(head[1:])
            need(i >= 1, "Chern class index must be at least 1")
            lhs, sep, rhs = line.partition("=")
            need(sep == "=" and lhs.split() == [head], f"expected '{head} = EXPR'")
            poly = expr(rhs, lineno, len(lhs) + 1)
            alg = free_algebra()
            for m in poly:
                if alg.degree(m) != 2 * i:
                    raise DegreeError(f"{head} must have degree {2 * i}, found a term of degree "
                                      f"{alg.degree(m)}", lineno, len(lhs) + 2)
            need(i not in current.classes, f"{head} assigned twice")
            current.classes[i] = poly
            continue
        current = None
        if head == "space":
            need(not seen_space, "only one 'space' line is allowed")
            need(len(words) in (4, 6) and words[2] == "dim",
                 "expected 'space NAME dim N [coeff Z|Zp]'")
            doc.name = words[1]
            try:
                doc.dim = int(words[3])
            except ValueError:
                raise ParseError(f"bad dimension {words[3]!r}", lineno, line.index(words[3]) + 1)
            need(doc.dim >= 0, "dimension must be non-negative")
            if len(words) == 6:
                need(words[4] == "coeff", "expected 'coeff'")
                m = re.fullmatch(r"Z(\d*)", words[5])
                need(m is not None, f"bad coefficient ring {words[5]!r}")
                doc.modulus = int(m.group(1) or 0)
                need(doc.modulus != 1, "Z1 is not a coefficient ring")
            seen_space = True
        elif head in ("gen", "basis"):
            need(len(words) == 4 and words[2] == "deg", f"expected '{head} NAME deg D'")
            name = words[1]
            need(re.fullmatch(r"[^\W\d]\w*", name) is not None, f"bad identifier {name!r}")
            taken = {g.name for g in doc.generators + doc.table_basis}
            need(name not in taken, f"duplicate generator {name!r}")
            need(not doc.relations and not doc.bundles,
                 "generators must be declared before relations and bundles")
            try:
                deg = int(words[3])
            except ValueError:
                raise ParseError(f"bad degree {words[3]!r}", lineno, line.index(words[3], 4) + 1)
            need(deg >= 1, "degree must be positive")
            if head == "gen":
                need(not doc.table_basis, "cannot mix 'gen' and 'basis'")
                doc.generators.append(Generator(name, deg))
            else:
                need(not doc.generators, "cannot mix 'gen' and 'basis'")
                doc.table_basis.append(Generator(name, deg))
        elif head == "rel":
            need(not doc.table_basis, "table-form rings use 'mul' and 'order', not 'rel'")
            body = line[indent + 3:]
            lhs, sep, rhs = body.partition("=")
            need(sep == "=", "expected 'rel EXPR = EXPR'")
            base = indent + 3
            left = expr(lhs, lineno, base)
            right = expr(rhs, lineno, base + len(lhs) + 1)
            doc.relations.extend(_orient(free_algebra(), left, right, lineno, col))
        elif head == "mul":
            need(doc.table_basis, "'mul' needs table-form 'basis' declarations")
            lhs, sep, rhs = line.partition("=")
            names = lhs.split()[1:]
            need(sep == "=" and len(names) == 2, "expected 'mul X Y = EXPR'")
            alg = free_algebra()
            for n in names:
                need(n in alg.index, f"unknown basis element {n!r}")
            x, y = sorted(names, key=alg.index.get)
            poly = expr(rhs, lineno, len(lhs) + 1)
            target = alg.degrees[alg.index[x]] + alg.degrees[alg.index[y]]
            entries = []
            for m, c in poly.items():
                if alg.degree(m) != target:
                    raise DegreeError(f"product {x}*{y} must have degree {target}", lineno,
                                      len(lhs) + 2)
                need(sum(m) == 1, "table products must be combinations of basis elements",
                     len(lhs) + 2)
                entries.append((c, alg.names[m.index(1)]))
            if names != [x, y]:
                # y*x = (-1)^{|x||y|} x*y
                if alg.odd[alg.index[x]] and alg.odd[alg.index[y]]:
                    entries = [(-c, n) for c, n in entries]
            need((x, y) not in doc.products, f"product {x}*{y} given twice")
            doc.products[(x, y)] = entries
        elif head == "order":
            need(doc.table_basis, "'order' needs table-form 'basis' declarations")
            need(len(words) == 3, "expected 'order NAME N'")
            need(words[1] in {g.name for g in doc.table_basis}, f"unknown basis element {words[1]!r}")
            need(words[2].isdigit() and int(words[2]) >= 2, "order must be an integer >= 2")
            doc.orders[words[1]] = int(words[2])
        elif head == "bundle":
            need(len(words) == 2, "expected 'bundle LABEL'")
            need(words[1] not in {b.label for b in doc.bundles}, f"duplicate bundle {words[1]!r}")
            current = BundleSpec(words[1], lineno)
            doc.bundles.append(current)
        elif head == "flag":
            lhs, sep, rhs = line.partition("=")
            keys = lhs.split()[1:]
            need(sep == "=" and len(keys) == 1, "expected 'flag KEY = VALUE'")
            need(keys[0] in _FLAG_TYPES, f"unknown flag {keys[0]!r}", lhs.index(keys[0]) + 1)
            doc.flags[keys[0]] = _flag_value(keys[0], rhs, lineno, len(lhs) + 2)
        else:
            raise ParseError(f"unknown statement {head!r}", lineno, col)
    if not seen_space:
        raise ParseError("missing 'space' line", 1, 1)
    return doc


def _orient(alg: _FreeAlgebra, left, right, lineno, col) -> List[Relation]:
    poly = alg.add(left, alg.scale(right, -1))
    if not poly:
        return []
    degs = {alg.degree(m) for m in poly}
    if len(degs) > 1:
        raise DegreeError(f"inhomogeneous relation (degrees {sorted(degs)})", lineno, col)
    lead = max(poly, key=alg.key)
    c = poly[lead]
    if c < 0:
        poly = alg.scale(poly, -1)
        c = -c
    if sum(lead) == 0:
        raise NonAdmissiblePresentation(f"line {lineno}: relation sets a constant to zero")
    rest = [(-v, alg.spec(m)) for m, v in sorted(poly.items(), key=lambda t: alg.key(t[0]),
                                                   reverse=True) if m != lead]
    if c > 1 and rest:
        raise NonAdmissiblePresentation(
            f"line {lineno}: leading coefficient {c} with a nonzero remainder")
    if c > 1:
        return [Relation(alg.spec(lead), (), c)]
    return [Relation(alg.spec(lead), rest)]


def _poly_str(terms) -> str:
    """Format {(coef, {name: exp})} style terms as a DSL expression."""
    out = ""
    for c, spec in terms:
        body = "*".join(n if e == 1 else f"{n}^{e}" for n, e in spec.items() if e) or "1"
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
    return out or "0"


def export(presentation, bundles=(), meta: Optional[SpaceMeta] = None) -> str:
    """Write a presentation, bundles and flags in the text format."""
    p = presentation
    coeff = "Z" if not p.modulus else f"Z{p.modulus}"
    lines = [f"space {p.name or 'X'} dim {p.max_degree} coeff {coeff}"]
    if isinstance(p, TablePresentation):
        for g in p.basis:
            lines.append(f"basis {g.name} deg {g.degree}")
        for (x, y), rhs in p.products.items():
            lines.append(f"mul {x} {y} = {_poly_str([(c, {n: 1}) for c, n in rhs])}")
        for n, o in p.orders.items():
            lines.append(f"order {n} {o}")
    else:
        for g in p.generators:
            lines.append(f"gen {g.name} deg {g.degree}")
        for rel in p.relations:
            lhs = _poly_str([(rel.coefficient, dict(rel.lhs))])
            lines.append(f"rel {lhs} = {_poly_str(list(rel.rhs))}")
    for b in bundles:
        lines.append(f"bundle {b.label}")
        for i, c in enumerate(b.classes, start=1):
            if c:
                lines.append(f"c{i} = {c}")
    if meta is not None:
        for key in SpaceMeta.FLAGS:
            value = getattr(meta, key)
            if key == "sphere_retract_dims":
                if value:
                    lines.append(f"flag {key} = " + ", ".join(str(v) for v in value))
            elif key == "complex_dim":
                if value is not None:
                    lines.append(f"flag {key} = {value}")
            elif value:
                lines.append(f"flag {key} = true")
    return "\n".join(lines) + "\n"


def export_entry(entry) -> str:
    return export(entry.presentation, entry.candidates, entry.meta)
