"""Exact integer linear algebra: Smith normal form and subgroup tests in
finitely generated abelian groups.

Matrices are plain lists of rows of Python ints, so there is no overflow at
any size.  A finitely generated abelian group is described by its list of
cyclic orders, with 0 standing for an infinite cyclic summand.
"""

from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FGGroup:
    """The group Z/d_1 + ... + Z/d_n, where Z/0 is read as Z."""

    orders: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(d) for d in self.orders))
        for d in self.orders:
            if d < 0 or d == 1:
                raise ValueError(f"invalid cyclic order {d}")

    def __len__(self):
        return len(self.orders)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.orders if d == 0)

    def invariant_factors(self) -> List[int]:
        """Canonical invariant factors, units dropped (0 last)."""
        return invariant_factors(self.orders)

    def is_trivial(self) -> bool:
        return not self.orders

    def is_cyclic(self) -> bool:
        return len(self.invariant_factors()) <= 1

    def __str__(self):
        if not self.orders:
            return "0"
        return " + ".join("Z" if d == 0 else f"Z/{d}" for d in self.orders)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _diag(orders: Sequence[int]) -> Matrix:
    n = len(orders)
    return [[orders[i] if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def determinant(m: Matrix) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: Sequence[Sequence[int]]) -> Tuple[List[int], Matrix, Matrix]:
    """Return ``(diag, left, right)`` with ``left * m * right`` diagonal.

    ``diag`` has ``min(rows, cols)`` non-negative entries forming a
    divisibility chain; ``left`` and ``right`` are unimodular.  The pivot is
    always an entry of least nonzero absolute value, ties broken by the
    lowest (row, col), so the output is reproducible.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[int(x) for x in row] for row in m]
    for row in a:
        if len(row) != cols:
            raise DimensionMismatch("ragged matrix")
    left = identity(rows)
    right = identity(cols)

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in right:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    diag = []
    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    v = abs(a[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            # row and column t are clear; enforce divisibility on the rest
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        diag.append(a[t][t])
    return diag, left, right


def _check_lengths(vectors, n):
    for v in vectors:
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in a group with {n} summands")


def _relation_matrix(gens, orders) -> Matrix:
    rows = [list(map(int, g)) for g in gens]
    n = len(orders)
    for j, d in enumerate(orders):
        if d:
            rows.append([d if k == j else 0 for k in range(n)])
    return rows


def saturates(gens: Sequence[Sequence[int]], orders: Sequence[int]) -> bool:
    """True iff ``gens`` generate all of the group with the given orders."""
    orders = tuple(orders)
    n = len(orders)
    _check_lengths(gens, n)
    if n == 0:
        return True
    rows = _relation_matrix(gens, orders)
    if len(rows) < n:
        return False
    diag, _, _ = smith_normal_form(rows)
    return len(diag) == n and all(d == 1 for d in diag)


def member(x: Sequence[int], gens: Sequence[Sequence[int]], orders: Sequence[int]) -> bool:
    """True iff ``x`` lies in the subgroup generated by ``gens``."""
    orders = tuple(orders)
    n = len(orders)
    _check_lengths([x, *gens], n)
    if n == 0:
        return True
    rows = _relation_matrix(gens, orders)
    if not rows:
        return all(v == 0 for v in x)
    diag, _, right = smith_normal_form(rows)
    # x = y*M  <=>  x*R = z*D with z = y*L^{-1}
    xr = [sum(x[k] * right[k][j] for k in range(n)) for j in range(n)]
    for j, v in enumerate(xr):
        d = diag[j] if j < len(diag) else 0
        if d == 0:
            if v != 0:
                return False
        elif v % d:
            return False
    return True


def invariant_factors(orders: Sequence[int]) -> List[int]:
    """Non-unit invariant factors of Z/d_1 + ... + Z/d_n (orders may include 1)."""
    if not orders:
        return []
    diag, _, _ = smith_normal_form(_diag(orders))
    return [d for d in diag if d != 1]
