"""Structure constants of a semisimple Lie algebra in a Chevalley-type basis.

The integral Chevalley basis ``x_r`` (``[x_r, x_{-r}] = r^vee``) is fixed by
taking ``N_{a,b} = +(p+1)`` on every extraspecial pair and propagating to
all other pairs through the standard relations between the ``N_{r,s}``.
Negative root vectors are then rescaled, ``e_{-a} = (a,a)/2 * x_{-a}``, so
that ``(e_a, e_{-a}) = 1`` and ``h_a := [e_a, e_{-a}]`` is the element of h
dual to ``a`` under the invariant form.

Basis order: ``e_{-a}`` for positive ``a`` in root order, then
``h_{a_1}, ..., h_{a_l}``, then ``e_a`` in root order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DimensionMismatch, SignConsistencyError
from .rootsys import RootSystemData, build_root_system


def _neg(r):
    return tuple(-k for k in r)


def _add(r, s):
    return tuple(a + b for a, b in zip(r, s))


def _is_positive(r):
    return any(k > 0 for k in r)


class _StructureConstants:
    """``N_{r,s}`` for the integral Chevalley basis, memoized."""

    def __init__(self, rs: RootSystemData):
        self.rs = rs
        self.order = {r: i for i, r in enumerate(rs.positive)}
        self.memo: dict = {}
        self.extraspecial = {}
        for a in rs.positive:
            for b in rs.positive:
                if self.order[a] >= self.order[b]:
                    continue
                xi = _add(a, b)
                if xi in self.order and xi not in self.extraspecial:
                    # first a in root order wins since we loop a ascending
                    self.extraspecial[xi] = (a, b)

    def p(self, r, s) -> int:
        """Largest p with s - p r a root."""
        p = 0
        cur = s
        while True:
            cur = tuple(c - k for c, k in zip(cur, r))
            if self.rs.is_root(cur):
                p += 1
            else:
                return p

    def n(self, r, s) -> Fraction:
        key = (r, s)
        if key in self.memo:
            return self.memo[key]
        val = self._compute(r, s)
        self.memo[key] = val
        return val

    def _compute(self, r, s) -> Fraction:
        rs = self.rs
        total = _add(r, s)
        if not any(total) or not rs.is_root(total):
            return Fraction(0)
        rpos, spos = _is_positive(r), _is_positive(s)
        if rpos and spos:
            if self.order[r] > self.order[s]:
                return -self.n(s, r)
            return self._special(r, s)
        if not rpos and not spos:
            return -self.n(_neg(r), _neg(s))
        # r + s + t = 0 with N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s)
        t = _neg(total)
        if _is_positive(s) == _is_positive(t):
            return rs.norm(t) / rs.norm(r) * self.n(s, t)
        return rs.norm(t) / rs.norm(s) * self.n(t, r)

    def _special(self, xi, zeta) -> Fraction:
        rs = self.rs
        rho = _add(xi, zeta)
        a, b = self.extraspecial[rho]
        if (xi, zeta) == (a, b):
            return Fraction(self.p(a, b) + 1)
        acc = Fraction(0)
        bx = _add(b, _neg(xi))
        if rs.is_root(bx):
            acc += self.n(b, _neg(xi)) * self.n(a, _neg(zeta)) / rs.norm(bx)
        ax = _add(a, _neg(xi))
        if rs.is_root(ax):
            acc += self.n(_neg(xi), a) * self.n(b, _neg(zeta)) / rs.norm(ax)
        val = rs.norm(rho) / self.n(a, b) * acc
        expected = self.p(xi, zeta) + 1
        if abs(val) != expected:
            raise SignConsistencyError(
                f"N{xi},{zeta} = {val}, expected +-{expected}"
            )
        return val


class LieAlgebraBasis:
    """Structure constants and invariant form on the ordered basis.

    ``brackets[i][j]`` is a dict ``{k: c}`` with ``[x_i, x_j] = sum c x_k``;
    ``form`` maps index pairs to the nonzero values ``(x_i, x_j)``.
    """

    def __init__(self, rs: RootSystemData):
        self.rs = rs
        P, l = rs.n_positive, rs.rank
        self.rank = l
        self.n_positive = P
        self.dim = rs.dim
        self.roots: list = [_neg(r) for r in rs.positive] + [None] * l + list(
            rs.positive
        )
        self._root_index = {
            r: i for i, r in enumerate(self.roots) if r is not None
        }
        self.names = [
            "e[-" + ",".join(str(k) for k in r) + "]" for r in rs.positive
        ]
        self.names += [f"h[{i + 1}]" for i in range(l)]
        self.names += ["e[+" + ",".join(str(k) for k in r) + "]" for r in rs.positive]
        self._name_index = {n: i for i, n in enumerate(self.names)}
        self.brackets = [[{} for _ in range(self.dim)] for _ in range(self.dim)]
        self.form: dict = {}
        self._build()

    # index helpers
    def root_index(self, root) -> int:
        return self._root_index[tuple(root)]

    def cartan_index(self, i: int) -> int:
        return self.n_positive + i

    def is_cartan(self, idx: int) -> bool:
        return self.roots[idx] is None

    def index(self, name: str) -> int:
        return self._name_index[name]

    def weight(self, idx: int) -> tuple:
        r = self.roots[idx]
        return r if r is not None else (0,) * self.rank

    def _scale(self, root) -> Fraction:
        # e_r = scale * x_r
        if _is_positive(root):
            return Fraction(1)
        return self.rs.norm(root) / 2

    def _build(self):
        rs = self.rs
        l = self.rank
        sc = _StructureConstants(rs)
        roots = rs.roots()
        for r in roots:
            i = self.root_index(r)
            for s in roots:
                j = self.root_index(s)
                total = _add(r, s)
                if not any(total):
                    # [e_r, e_{-r}] = h_r = sum k_m h_{alpha_m}, r of either sign
                    self.brackets[i][j] = {
                        self.cartan_index(m): Fraction(k) for m, k in enumerate(r) if k
                    }
                    continue
                if not rs.is_root(total):
                    continue
                c = sc.n(r, s) * self._scale(r) * self._scale(s) / self._scale(total)
                self.brackets[i][j] = {self.root_index(total): c}
            # [h_{alpha_m}, e_r] = (r, alpha_m) e_r
            for m in range(l):
                simple = tuple(1 if q == m else 0 for q in range(l))
                w = rs.inner(r, simple)
                if w:
                    hm = self.cartan_index(m)
                    self.brackets[hm][i] = {i: w}
                    self.brackets[i][hm] = {i: -w}
            self.form[(i, self.root_index(_neg(r)))] = Fraction(1)
        for a in range(l):
            for b in range(l):
                g = rs.gram[a][b]
                if g:
                    self.form[(self.cartan_index(a), self.cartan_index(b))] = g

    # vector-level operations
    def _check(self, x):
        if len(x) != self.dim:
            raise DimensionMismatch(f"vector of length {len(x)}, dim g = {self.dim}")

    def lie_bracket(self, x: Sequence, y: Sequence) -> list[Fraction]:
        self._check(x)
        self._check(y)
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.brackets[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for k, c in row[j].items():
                    out[k] += xi * yj * c
        return out

    def killing_like_form(self, x: Sequence, y: Sequence) -> Fraction:
        """The normalized invariant form ``(x, y)``."""
        self._check(x)
        self._check(y)
        return sum(
            (x[i] * y[j] * v for (i, j), v in self.form.items()), Fraction(0)
        )

    inner = killing_like_form

    def basis_vector(self, idx: int) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        v[idx] = Fraction(1)
        return v

    def cartan_element(self, mu: Sequence) -> list[Fraction]:
        """Embed a CartanVector (coordinates in h_{alpha_i}) into g."""
        v = [Fraction(0)] * self.dim
        for i, c in enumerate(mu):
            v[self.cartan_index(i)] = Fraction(c)
        return v

    def cartan_from_form(self, values: Sequence) -> list[Fraction]:
        """The element ``h`` of h with ``(h, h_{alpha_j}) = values[j]``.

        Realizes the identification of g* with g on the Cartan part.
        """
        l = self.rank
        if len(values) != l:
            raise DimensionMismatch(f"{len(values)} values for rank {l}")
        coords = solve_rational([list(row) for row in self.rs.gram], list(values))
        return self.cartan_element(coords)

    def functional(self, mu: Sequence) -> list[Fraction]:
        """Values ``(mu, x_i)`` on every basis element: mu viewed in g*."""
        v = self.cartan_element(mu)
        out = [Fraction(0)] * self.dim
        for (i, j), f in self.form.items():
            if v[i]:
                out[j] += v[i] * f
        return out


def solve_rational(a: list[list], b: list) -> list[Fraction]:
    """Solve a small nonsingular rational system by Gauss-Jordan."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[r][n] for r in range(n)]


@lru_cache(maxsize=None)
def build_lie_algebra(rs: RootSystemData | str) -> LieAlgebraBasis:
    if isinstance(rs, str):
        rs = build_root_system(rs)
    return LieAlgebraBasis(rs)
