"""Exact sparse linear algebra over Q.

Rows are dicts ``{column: value}``.  Elimination is fraction-free: rows are
kept as primitive integer vectors, a pivot step is
``row <- p * row - row[c] * pivot_row`` followed by removal of the content.
Pivots are always the leftmost nonzero column, so results depend only on
the column order and the row insertion order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .polyring import Monomial, SparsePoly


def primitive(row: Mapping[int, object]) -> dict[int, int]:
    """Scale a rational row to coprime integers with a positive leading entry."""
    items = [(c, Fraction(v)) for c, v in row.items() if v]
    if not items:
        return {}
    den = 1
    for _, v in items:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = {c: int(v * den) for c, v in items}
    return _normalize(ints)


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _eliminate(row: dict[int, int], piv: dict[int, int], c: int) -> dict[int, int]:
    a = piv[c]
    b = row[c]
    g = math.gcd(a, b)
    a //= g
    b //= g
    out = {k: a * v for k, v in row.items()}
    for k, v in piv.items():
        nv = out.get(k, 0) - b * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return _normalize(out) if out else out


class Echelon:
    """Incrementally built row echelon form keyed by pivot column."""

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce_leading(self, row: Mapping[int, object]) -> dict[int, int]:
        r = primitive(row)
        while r:
            c = min(r)
            piv = self.pivots.get(c)
            if piv is None:
                return r
            r = _eliminate(r, piv, c)
        return r

    def insert(self, row: Mapping[int, object]) -> bool:
        """Add a row; returns False when it already lies in the span."""
        r = self.reduce_leading(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.reduce_leading(row)

    def rref(self) -> list[dict[int, Fraction]]:
        """Reduced rows, pivot entry 1, sorted by pivot column."""
        cols = sorted(self.pivots)
        rows = {c: dict(self.pivots[c]) for c in cols}
        for c in reversed(cols):
            pr = rows[c]
            for c2 in cols:
                if c2 >= c:
                    break
                r = rows[c2]
                if c in r:
                    rows[c2] = _eliminate(r, pr, c)
        out = []
        for c in cols:
            r = rows[c]
            lead = r[c]
            out.append({k: Fraction(v, lead) for k, v in sorted(r.items())})
        return out


def rank(rows: Iterable[Mapping[int, object]]) -> int:
    e = Echelon()
    for r in rows:
        e.insert(r)
    return e.rank


def rref(rows: Iterable[Mapping[int, object]]) -> list[dict[int, Fraction]]:
    e = Echelon()
    for r in rows:
        e.insert(r)
    return e.rref()


def kernel(rows: Iterable[Mapping[int, object]], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of ``{v : row . v = 0 for every row}``, one vector per free column."""
    reduced = rref(rows)
    pivot_of = {min(r): r for r in reduced}
    basis = []
    for f in range(ncols):
        if f in pivot_of:
            continue
        vec = {f: Fraction(1)}
        for p, r in pivot_of.items():
            v = r.get(f)
            if v:
                vec[p] = -v
        basis.append(dict(sorted(vec.items())))
    return basis


class SubspaceMatrix:
    """Rows of coefficient vectors over a fixed ordered monomial basis."""

    def __init__(self, monomials: Sequence[Monomial], rows: Iterable[Mapping[int, object]] = (), degree=None):
        self.monomials = list(monomials)
        self.degree = degree if degree is not None else (sum(self.monomials[0]) if self.monomials else 0)
        self.column = {m: i for i, m in enumerate(self.monomials)}
        self.rows = [dict(r) for r in rows]
        self._echelon = None

    @property
    def nvars(self) -> int:
        return len(self.monomials[0]) if self.monomials else 0

    @property
    def ncols(self) -> int:
        return len(self.monomials)

    @classmethod
    def from_polys(cls, monomials, polys: Iterable[SparsePoly], degree=None) -> "SubspaceMatrix":
        mat = cls(monomials, degree=degree)
        for p in polys:
            mat.rows.append(mat.vector(p))
        return mat

    def vector(self, p: SparsePoly) -> dict[int, Fraction]:
        try:
            return {self.column[m]: c for m, c in p.terms.items()}
        except KeyError as exc:
            raise ValueError(f"monomial {exc.args[0]} outside the basis") from None

    def poly(self, row: Mapping[int, object]) -> SparsePoly:
        return SparsePoly({self.monomials[c]: v for c, v in row.items()}, self.nvars)

    def to_polys(self) -> list[SparsePoly]:
        return [self.poly(r) for r in self.rows]

    def echelon(self) -> Echelon:
        if self._echelon is None:
            e = Echelon()
            for r in self.rows:
                e.insert(r)
            self._echelon = e
        return self._echelon

    def rank(self) -> int:
        return self.echelon().rank

    def rref(self) -> "SubspaceMatrix":
        return SubspaceMatrix(self.monomials, self.echelon().rref(), self.degree)

    def kernel(self) -> list[dict[int, Fraction]]:
        return kernel(self.rows, self.ncols)

    def contains(self, p: SparsePoly) -> bool:
        """Row-space membership; polynomials with foreign monomials are outside."""
        if any(m not in self.column for m in p.terms):
            return False
        return self.echelon().contains(self.vector(p))

    def __len__(self):
        return len(self.rows)


def map_kernel(
    source: Sequence[Monomial],
    images: Callable[[Monomial], Iterable[SparsePoly]],
    degree=None,
) -> SubspaceMatrix:
    """Kernel of a stack of linear maps given on a monomial basis.

    ``images(m)`` yields one polynomial per map in the stack; the kernel is
    the intersection of the kernels of all the maps.  Returned rows are the
    RREF basis over ``source``.
    """
    rows: dict = {}
    for s, m in enumerate(source):
        for a, img in enumerate(images(m)):
            for tm, c in img.terms.items():
                rows.setdefault((a, tm), {})[s] = c
    keys = sorted(rows, key=lambda k: (k[0], tuple(-e for e in k[1])))
    basis = kernel((rows[k] for k in keys), len(source))
    return SubspaceMatrix(source, rref(basis), degree)
