"""U(g) in the PBW basis of ordered monomials.

An ordered monomial is stored as an exponent tuple over the Lie basis; the
word it stands for lists the basis elements in basis order (negative root
vectors, Cartan, positive root vectors).  Products are brought to normal
form by ``x_a x_b = x_b x_a + [x_a, x_b]`` for ``a > b``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .chevalley import LieAlgebraBasis
from .errors import BasisMismatch
from .polyring import SparsePoly, monomial_key, pencil, poisson_bracket


def _word(m: Sequence[int]) -> list[int]:
    w = []
    for i, e in enumerate(m):
        w.extend([i] * e)
    return w


class EnvelopingAlgebra:
    """Normal-ordering engine for U(g); the memo table is a pure cache."""

    def __init__(self, lie: LieAlgebraBasis):
        self.lie = lie
        self.dim = lie.dim
        self._memo: dict = {}

    def element(self, terms: Mapping | None = None) -> "UEAElement":
        return UEAElement(self, terms)

    def one(self) -> "UEAElement":
        return UEAElement(self, {(0,) * self.dim: Fraction(1)})

    def generator(self, i: int) -> "UEAElement":
        m = [0] * self.dim
        m[i] = 1
        return UEAElement(self, {tuple(m): Fraction(1)})

    def _times_generator(self, m: tuple, j: int) -> dict:
        """Normal form of (ordered monomial m) * x_j."""
        key = (m, j)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        last = max((i for i, e in enumerate(m) if e), default=-1)
        if last <= j:
            mm = list(m)
            mm[j] += 1
            out = {tuple(mm): Fraction(1)}
        else:
            # m = m' x_last;  m' x_last x_j = (m' x_j) x_last + m' [x_last, x_j]
            prefix = list(m)
            prefix[last] -= 1
            prefix = tuple(prefix)
            out: dict = {}
            for mm, c in self._times_generator(prefix, j).items():
                for m2, c2 in self._times_generator(mm, last).items():
                    out[m2] = out.get(m2, 0) + c * c2
            for k, c in self.lie.brackets[last][j].items():
                for m2, c2 in self._times_generator(prefix, k).items():
                    out[m2] = out.get(m2, 0) + c * c2
            out = {k: v for k, v in out.items() if v}
        self._memo[key] = out
        return out

    def _times_word(self, terms: Mapping, word: Iterable[int]) -> dict:
        cur = dict(terms)
        for j in word:
            nxt: dict = {}
            for m, c in cur.items():
                for m2, c2 in self._times_generator(m, j).items():
                    nxt[m2] = nxt.get(m2, 0) + c * c2
            cur = {k: v for k, v in nxt.items() if v}
        return cur

    def straighten(self, word: Sequence[int]) -> "UEAElement":
        """Normal form of the product ``x_{w_0} x_{w_1} ...``."""
        return UEAElement(self, self._times_word(self.one().terms, word))

    def multiply(self, a: "UEAElement", b: "UEAElement") -> "UEAElement":
        out: dict = {}
        for m2, c2 in b.terms.items():
            for m, c in self._times_word(a.terms, _word(m2)).items():
                out[m] = out.get(m, 0) + c * c2
        return UEAElement(self, out)

    def symmetrize(self, p: SparsePoly) -> "UEAElement":
        """``x_1...x_k -> (1/k!) sum over orderings``, straightened."""
        if p.nvars != self.dim:
            raise BasisMismatch("polynomial and algebra live on different bases")
        out: dict = {}
        for m, c in p.terms.items():
            word = _word(m)
            orders = set(itertools.permutations(word))
            # every distinct ordering occurs with the same multiplicity in k!
            weight = c / len(orders)
            for w in sorted(orders):
                for mm, v in self._times_word(self.one().terms, w).items():
                    out[mm] = out.get(mm, 0) + weight * v
        return UEAElement(self, out)


class UEAElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: EnvelopingAlgebra, terms: Mapping | None = None):
        self.algebra = algebra
        self.terms = {tuple(m): Fraction(c) for m, c in (terms or {}).items() if c}

    @property
    def filtration_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise BasisMismatch("elements of different enveloping algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return UEAElement(self.algebra, out)

    def __neg__(self):
        return UEAElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            self._check(other)
            return self.algebra.multiply(self, other)
        c = Fraction(other)
        return UEAElement(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def component(self, d: int) -> SparsePoly:
        """Degree-``d`` PBW part read as a commutative polynomial."""
        return SparsePoly({m: c for m, c in self.terms.items() if sum(m) == d}, self.algebra.dim)

    def gr(self) -> SparsePoly:
        """Image in gr U(g) = S(g): the top filtration component."""
        return self.component(self.filtration_degree)

    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = names or self.algebra.lie.names
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]), reverse=True):
            factors = [str(c)]
            for i, e in enumerate(m):
                factors.extend([names[i]] * e)
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"UEAElement({self.to_text()})"


def commutator(a: UEAElement, b: UEAElement) -> UEAElement:
    return a * b - b * a


def check_quadratic_lift(slice_basis: Sequence[SparsePoly], algebra: EnvelopingAlgebra) -> tuple[bool, list]:
    """Do the symmetrized slice elements commute pairwise in U(g)?

    Returns ``(all_commute, witnesses)``; a witness is
    ``(i, j, commutator)`` for a pair that fails.
    """
    lifted = [algebra.symmetrize(p) for p in slice_basis]
    witnesses = []
    for i in range(len(lifted)):
        for j in range(i + 1, len(lifted)):
            c = commutator(lifted[i], lifted[j])
            if c:
                witnesses.append((i, j, c))
    return not witnesses, witnesses


def gr_commutator_matches_bracket(f: SparsePoly, g: SparsePoly, algebra: EnvelopingAlgebra) -> bool:
    """Degree ``a+b-1`` part of ``[sym f, sym g]`` equals ``{f, g}_1``."""
    a, b = f.degree, g.degree
    c = commutator(algebra.symmetrize(f), algebra.symmetrize(g))
    if c.filtration_degree > a + b - 1:
        return False
    return c.component(a + b - 1) == poisson_bracket(f, g, pencil(algebra.lie, 1))
