"""The Poisson algebra S(g) with rational coefficients.

Polynomials are sparse maps from exponent tuples (one slot per Lie basis
element, in basis order) to nonzero ``Fraction`` coefficients.  The bracket
is the pencil ``t{.,.} + (1-t){.,.}_gamma``: on generators
``{x_i, x_j}_t = t [x_i, x_j] + (1-t) gamma([x_i, x_j])``, extended as a
biderivation.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .chevalley import LieAlgebraBasis
from .errors import BasisMismatch, InvalidParameter, NonLinearInput

Monomial = tuple


def monomial_key(m: Monomial):
    """Graded lex: lower degree first, then larger leading exponents first."""
    return (sum(m), tuple(-e for e in m))


def monomials_of_degree(nvars: int, n: int) -> list[Monomial]:
    """All exponent tuples of total degree ``n`` in graded-lex order."""
    if nvars == 0:
        return [()] if n == 0 else []
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], n, nvars)
    return out


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class SparsePoly:
    """Immutable sparse polynomial in ``nvars`` commuting variables."""

    __slots__ = ("terms", "nvars", "_degree")

    def __init__(self, terms: Mapping[Monomial, object] | None, nvars: int):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    if len(m) != nvars:
                        raise BasisMismatch(
                            f"monomial of length {len(m)} in a ring of {nvars} variables"
                        )
                    clean[tuple(m)] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean
        self.nvars = nvars
        self._degree = None

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(None, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "SparsePoly":
        return cls({(0,) * nvars: Fraction(c)}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "SparsePoly":
        m = [0] * nvars
        m[i] = 1
        return cls({tuple(m): Fraction(1)}, nvars)

    @classmethod
    def monomial(cls, m: Monomial, coeff=1) -> "SparsePoly":
        return cls({tuple(m): Fraction(coeff)}, len(m))

    @classmethod
    def from_linear(cls, vec: Sequence) -> "SparsePoly":
        n = len(vec)
        terms = {}
        for i, c in enumerate(vec):
            if c:
                m = [0] * n
                m[i] = 1
                terms[tuple(m)] = c
        return cls(terms, n)

    # basic queries
    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self._degree is None:
            self._degree = max((sum(m) for m in self.terms), default=-1)
        return self._degree

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "SparsePoly":
        return SparsePoly({m: c for m, c in self.terms.items() if sum(m) == d}, self.nvars)

    def degrees(self) -> list[int]:
        return sorted({sum(m) for m in self.terms})

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]), reverse=True)

    def linear_vector(self) -> list[Fraction]:
        """Coefficients of the degree-1 part; raises if degree > 1."""
        if self.degree > 1:
            raise NonLinearInput(f"polynomial of degree {self.degree} is not linear")
        vec = [Fraction(0)] * self.nvars
        for m, c in self.terms.items():
            if sum(m) == 1:
                vec[m.index(1)] = c
        return vec

    # arithmetic
    def _check(self, other: "SparsePoly"):
        if self.nvars != other.nvars:
            raise BasisMismatch(f"rings with {self.nvars} and {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(other, self.nvars)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SparsePoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SparsePoly":
        c = Fraction(c)
        if not c:
            return SparsePoly.zero(self.nvars)
        return SparsePoly({m: v * c for m, v in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return SparsePoly(out, self.nvars)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidParameter("negative power")
        result = SparsePoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        names = [f"x{i}" for i in range(self.nvars)]
        return f"SparsePoly({self.to_text(names)})"

    # calculus
    def partial(self, i: int) -> "SparsePoly":
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * e
        return SparsePoly(out, self.nvars)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def substitute(self, images: Sequence["SparsePoly"]) -> "SparsePoly":
        """Algebra map sending variable ``i`` to ``images[i]``."""
        if len(images) != self.nvars:
            raise BasisMismatch("one image per variable required")
        target = images[0].nvars if images else 0
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        acc: dict = {}
        for m, c in self.terms.items():
            term = SparsePoly.constant(c, target)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            for mm, v in term.terms.items():
                acc[mm] = acc.get(mm, 0) + v
        return SparsePoly(acc, target)

    def shift_expand(self, direction: Sequence) -> list["SparsePoly"]:
        """Coefficients ``P_k`` of ``f(x + s*direction) = sum_k s^k P_k``."""
        direction = [Fraction(v) for v in direction]
        active = [i for i, v in enumerate(direction) if v]
        by_power: dict = {}
        for m, c in self.terms.items():
            choices = []
            for i in active:
                e = m[i]
                choices.append([(j, math.comb(e, j) * direction[i] ** j) for j in range(e + 1)])
            for combo in itertools.product(*choices):
                k = sum(j for j, _ in combo)
                coeff = c
                mm = list(m)
                for i, (j, w) in zip(active, combo):
                    coeff *= w
                    mm[i] -= j
                bucket = by_power.setdefault(k, {})
                key = tuple(mm)
                bucket[key] = bucket.get(key, 0) + coeff
        top = max(by_power, default=-1)
        return [SparsePoly(by_power.get(k), self.nvars) for k in range(top + 1)]

    # serialization
    def to_text(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [str(c)]
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e:
                    factors.append(f"{names[i]}^{e}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def to_json(self, names: Sequence[str]) -> list:
        return [
            {
                "coeff": str(c),
                "monomial": {names[i]: e for i, e in enumerate(m) if e},
            }
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[dict], names: Sequence[str]) -> "SparsePoly":
        index = {n: i for i, n in enumerate(names)}
        terms: dict = {}
        for item in data:
            m = [0] * len(names)
            for name, e in item["monomial"].items():
                m[index[name]] += int(e)
            key = tuple(m)
            terms[key] = terms.get(key, 0) + Fraction(item["coeff"])
        return cls(terms, len(names))

    @classmethod
    def from_text(cls, text: str, names: Sequence[str]) -> "SparsePoly":
        index = {n: i for i, n in enumerate(names)}
        terms: dict = {}
        text = text.strip()
        if text == "0":
            return cls.zero(len(names))
        for part in text.split(" + "):
            factors = part.split(" * ")
            coeff = Fraction(factors[0])
            m = [0] * len(names)
            for f in factors[1:]:
                name, _, exp = f.partition("^")
                m[index[name]] += int(exp) if exp else 1
            key = tuple(m)
            terms[key] = terms.get(key, 0) + coeff
        return cls(terms, len(names))


class GammaFunctional:
    """A linear functional on g; the default takes 1 on every h_{alpha_i}."""

    def __init__(self, values: Sequence):
        self.values = tuple(Fraction(v) for v in values)

    @classmethod
    def standard(cls, lie: LieAlgebraBasis) -> "GammaFunctional":
        vals = [Fraction(0)] * lie.dim
        for i in range(lie.rank):
            vals[lie.cartan_index(i)] = Fraction(1)
        return cls(vals)

    def __call__(self, vec: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(self.values, vec)), Fraction(0))

    def of_dict(self, d: Mapping[int, Fraction]) -> Fraction:
        return sum((self.values[k] * c for k, c in d.items()), Fraction(0))


class BracketPencil:
    """``t{.,.} + (1-t){.,.}_gamma`` on S(g).

    ``table[i][j]`` holds ``(linear items, constant)`` of ``{x_i, x_j}_t``
    or ``None`` when it vanishes.
    """

    def __init__(self, lie: LieAlgebraBasis, t=1, gamma: GammaFunctional | None = None):
        self.lie = lie
        self.t = Fraction(t)
        self.gamma = gamma if gamma is not None else GammaFunctional.standard(lie)
        t = self.t
        table = []
        for i in range(lie.dim):
            row = []
            for j in range(lie.dim):
                br = lie.brackets[i][j]
                lin = tuple((k, t * c) for k, c in br.items()) if t else ()
                const = (1 - t) * self.gamma.of_dict(br) if t != 1 else Fraction(0)
                row.append((lin, const) if (lin or const) else None)
            table.append(row)
        self.table = table

    @property
    def nvars(self) -> int:
        return self.lie.dim


_PENCILS: dict = {}


def pencil(lie: LieAlgebraBasis, t=1) -> BracketPencil:
    """Cached pencil with the standard gamma."""
    key = (id(lie), Fraction(t))
    p = _PENCILS.get(key)
    if p is None or p.lie is not lie:
        p = BracketPencil(lie, t)
        _PENCILS[key] = p
    return p


def _partials(f: SparsePoly) -> dict:
    out: dict = {}
    for m, c in f.terms.items():
        for i, e in enumerate(m):
            if e:
                mm = list(m)
                mm[i] -= 1
                out.setdefault(i, []).append((mm, c * e))
    return out


def poisson_bracket(f: SparsePoly, g: SparsePoly, br: BracketPencil) -> SparsePoly:
    """``{f, g}_t = sum_{i,j} df/dx_i dg/dx_j {x_i, x_j}_t``."""
    n = br.nvars
    if f.nvars != n or g.nvars != n:
        raise BasisMismatch("polynomials and pencil live on different bases")
    table = br.table
    df = _partials(f)
    dg = _partials(g)
    out: dict = {}
    for i, fi in df.items():
        row = table[i]
        for j, gj in dg.items():
            entry = row[j]
            if entry is None:
                continue
            lin, const = entry
            for m1, c1 in fi:
                for m2, c2 in gj:
                    c = c1 * c2
                    base = [a + b for a, b in zip(m1, m2)]
                    for k, v in lin:
                        base[k] += 1
                        key = tuple(base)
                        base[k] -= 1
                        out[key] = out.get(key, 0) + c * v
                    if const:
                        key = tuple(base)
                        out[key] = out.get(key, 0) + c * const
    return SparsePoly(out, n)


def gamma_of_bracket(
    x: SparsePoly, y: SparsePoly, lie: LieAlgebraBasis, gamma: GammaFunctional | None = None
) -> Fraction:
    """``{x, y}_gamma = gamma([x, y])`` for polynomials of degree at most 1."""
    gamma = gamma if gamma is not None else GammaFunctional.standard(lie)
    for p in (x, y):
        if p.degree > 1:
            raise NonLinearInput(f"degree {p.degree} argument to the gamma bracket")
    return gamma(lie.lie_bracket(x.linear_vector(), y.linear_vector()))


def psi_t(f: SparsePoly, t, lie: LieAlgebraBasis, gamma: GammaFunctional | None = None) -> SparsePoly:
    """Isomorphism S(g)_1 -> S(g)_t, ``x -> x/t + (1-t)/t^2 gamma(x)``."""
    t = Fraction(t)
    if t == 0:
        raise InvalidParameter("psi_t is undefined at t = 0")
    gamma = gamma if gamma is not None else GammaFunctional.standard(lie)
    n = lie.dim
    images = []
    for i in range(n):
        img = SparsePoly.var(i, n).scale(1 / t)
        shift = (1 - t) / (t * t) * gamma.values[i]
        images.append(img + shift if shift else img)
    return f.substitute(images)


def basis_polys(lie: LieAlgebraBasis) -> list[SparsePoly]:
    return [SparsePoly.var(i, lie.dim) for i in range(lie.dim)]


def weight(m: Monomial, lie: LieAlgebraBasis) -> tuple:
    """Root-lattice weight of a monomial under the adjoint Cartan action."""
    w = [0] * lie.rank
    for i, e in enumerate(m):
        if e:
            r = lie.roots[i]
            if r is not None:
                for a in range(lie.rank):
                    w[a] += e * r[a]
    return tuple(w)
