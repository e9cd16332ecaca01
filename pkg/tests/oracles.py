"""Reference computations that share no code with the package.

The cohomology group in degree d of a presented ring is computed straight
from the definition: the free module on all monomials of degree d in the
free graded-commutative algebra, modulo the degree-d part of the ideal
generated by the relations.  Invariant factors come from sympy.
"""

from itertools import product as iproduct

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form


def _monomials(degrees, d):
    out = []

    def rec(i, prefix, rem):
        if i == len(degrees):
            if rem == 0:
                out.append(tuple(prefix))
            return
        for e in range(rem // degrees[i] + 1):
            rec(i + 1, prefix + [e], rem - e * degrees[i])

    rec(0, [], d)
    return out


def _sign(u, v, degrees):
    # sign of reordering the word u.v into sorted order: count odd letter inversions
    word = [i for i, e in enumerate(u) for _ in range(e)] + [i for i, e in enumerate(v) for _ in range(e)]
    odd = [i for i in word if degrees[i] % 2]
    inv = sum(1 for a in range(len(odd)) for b in range(a + 1, len(odd)) if odd[a] > odd[b])
    return -1 if inv % 2 else 1


class QuotientOracle:
    def __init__(self, presentation):
        if hasattr(presentation, "to_presentation"):
            presentation = presentation.to_presentation()
        p = presentation
        self.names = [g.name for g in p.generators]
        self.degrees = [g.degree for g in p.generators]
        self.modulus = p.modulus
        idx = {n: i for i, n in enumerate(self.names)}

        def mono(spec):
            return tuple(spec.get(n, 0) for n in self.names)

        self.relations = []  # (polynomial dict, degree)
        squares = set()
        for rel in p.relations:
            poly = {}
            lhs = mono(rel.lhs)
            poly[lhs] = rel.coefficient
            for c, spec in rel.rhs:
                m = mono(spec)
                poly[m] = poly.get(m, 0) - c
            self.relations.append((poly, self.deg(lhs)))
            if sum(lhs) == 2 and max(lhs) == 2:
                squares.add(lhs.index(2))
        if p.default_odd_squares:
            for i, d in enumerate(self.degrees):
                if d % 2 and i not in squares:
                    self.relations.append(({tuple(2 if k == i else 0 for k in range(len(idx))): 1}, 2 * d))

    def deg(self, m):
        return sum(e * d for e, d in zip(m, self.degrees))

    def rows(self, d):
        cols = _monomials(self.degrees, d)
        pos = {m: i for i, m in enumerate(cols)}
        rows = []
        for poly, rd in self.relations:
            if rd > d:
                continue
            for m in _monomials(self.degrees, d - rd):
                row = [0] * len(cols)
                for t, c in poly.items():
                    prod = tuple(a + b for a, b in zip(m, t))
                    row[pos[prod]] += _sign(m, t, self.degrees) * c
                rows.append(row)
        for m in cols:
            # graded commutativity forces 2x^2 = 0 for odd x
            if any(e >= 2 and dg % 2 for e, dg in zip(m, self.degrees)):
                rows.append([2 if c == m else 0 for c in cols])
            if self.modulus:
                rows.append([self.modulus if c == m else 0 for c in cols])
        return cols, rows

    def invariant_factors(self, d):
        cols, rows = self.rows(d)
        return _quotient_factors(len(cols), rows)

    def in_ideal(self, d, vec):
        """vec is a dict monomial -> coefficient of degree d."""
        cols, rows = self.rows(d)
        v = [vec.get(m, 0) for m in cols]
        return _quotient_factors(len(cols), rows) == _quotient_factors(len(cols), rows + [v])

    @staticmethod
    def word_product(u, v, degrees):
        return _sign(u, v, degrees), tuple(a + b for a, b in zip(u, v))


def _quotient_factors(n, rows):
    if n == 0:
        return []
    rows = [r for r in rows if any(r)]
    if not rows:
        return [0] * n
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    nonzero = [x for x in diag if x]
    out = sorted(x for x in nonzero if x != 1)
    return out + [0] * (n - len(nonzero))
