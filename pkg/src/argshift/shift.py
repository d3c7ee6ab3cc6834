"""Argument-shift subalgebras A_mu and their quadratic part Q_mu."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chevalley import LieAlgebraBasis
from .errors import (
    CommutativityError,
    DependentGenerators,
    InvalidParameter,
    NonRegularError,
)
from .invariants import InvariantGeneratorSet, free_monomial_count
from .linalg import SubspaceMatrix
from .polyring import SparsePoly, monomials_of_degree, pencil, poisson_bracket
from .rootsys import CartanVector, cartan_vector


def directional_derivative(phi: SparsePoly, mu: Sequence, k: int, lie: LieAlgebraBasis) -> SparsePoly:
    """``k! * [s^k] phi(x + s*mu)`` with mu acting through ``(mu, x_i)``."""
    if k < 0:
        raise InvalidParameter(f"derivative order {k} < 0")
    return all_derivatives(phi, mu, lie)[k] if k <= phi.degree else SparsePoly.zero(phi.nvars)


def all_derivatives(phi: SparsePoly, mu: Sequence, lie: LieAlgebraBasis) -> list[SparsePoly]:
    """``[d_mu^0 phi, ..., d_mu^deg phi]`` from a single shift expansion."""
    parts = phi.shift_expand(lie.functional(mu))
    parts += [SparsePoly.zero(phi.nvars)] * (phi.degree + 1 - len(parts))
    return [p.scale(math.factorial(k)) for k, p in enumerate(parts)]


def q_element(lie: LieAlgebraBasis, mu: Sequence, h: Sequence) -> SparsePoly:
    """``sum_{alpha > 0} <alpha,h>/<alpha,mu> e_alpha e_{-alpha}``."""
    rs = lie.rs
    terms = {}
    for alpha in rs.positive:
        den = rs.inner(alpha, mu)
        if den == 0:
            raise NonRegularError(f"mu is annihilated by the root {list(alpha)}", alpha)
        num = rs.inner(alpha, h)
        if num:
            m = [0] * lie.dim
            m[lie.root_index(alpha)] = 1
            m[lie.root_index(tuple(-k for k in alpha))] = 1
            terms[tuple(m)] = num / den
    return SparsePoly(terms, lie.dim)


def build_Q_mu(lie: LieAlgebraBasis, mu: Sequence) -> list[SparsePoly]:
    """Basis ``q_{h_{alpha_1}}, ..., q_{h_{alpha_l}}`` of Q_mu."""
    bad = lie.rs.vanishing_root(mu)
    if bad is not None:
        raise NonRegularError(f"mu is annihilated by the root {list(bad)}", bad)
    l = lie.rank
    return [q_element(lie, mu, [1 if j == i else 0 for j in range(l)]) for i in range(l)]


@dataclass
class QuadraticSlice:
    constants: list[SparsePoly]
    cartan: list[SparsePoly]
    cartan_squares: list[SparsePoly]
    q_mu: list[SparsePoly]

    def basis(self) -> list[SparsePoly]:
        return self.constants + self.cartan + self.cartan_squares + self.q_mu

    def __len__(self):
        return len(self.basis())


def quadratic_slice(lie: LieAlgebraBasis, mu: Sequence) -> QuadraticSlice:
    """``C + h + S^2(h) + Q_mu``."""
    n = lie.dim
    hs = [SparsePoly.var(lie.cartan_index(i), n) for i in range(lie.rank)]
    squares = [hs[i] * hs[j] for i in range(lie.rank) for j in range(i, lie.rank)]
    return QuadraticSlice([SparsePoly.constant(1, n)], hs, squares, build_Q_mu(lie, mu))


@dataclass
class ShiftFamily:
    lie: LieAlgebraBasis
    mu: CartanVector
    generators: list[SparsePoly]
    degrees: list[int]
    # (i, k): generator is d_mu^k Phi_i
    labels: list[tuple[int, int]]

    @property
    def count(self) -> int:
        return len(self.generators)


def check_commutative(polys: Sequence[SparsePoly], lie: LieAlgebraBasis) -> list[tuple[int, int]]:
    """Index pairs whose t=1 Poisson bracket is nonzero."""
    br = pencil(lie, 1)
    bad = []
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if poisson_bracket(polys[i], polys[j], br):
                bad.append((i, j))
    return bad


def build_shift_family(
    lie: LieAlgebraBasis, mu: Sequence, gens: InvariantGeneratorSet, check: bool = True
) -> ShiftFamily:
    """Generators ``d_mu^k Phi_i`` for ``0 <= k < deg Phi_i``."""
    mu = cartan_vector(mu)
    bad = lie.rs.vanishing_root(mu)
    if bad is not None:
        raise NonRegularError(f"mu is annihilated by the root {list(bad)}", bad)
    out, degs, labels = [], [], []
    for i, phi in enumerate(gens.generators):
        d = gens.degrees[i]
        for k, p in enumerate(all_derivatives(phi, mu, lie)[:d]):
            out.append(p)
            degs.append(d - k)
            labels.append((i, k))
    fam = ShiftFamily(lie, mu, out, degs, labels)
    if check:
        bad_pairs = check_commutative(out, lie)
        if bad_pairs:
            i, j = bad_pairs[0]
            raise CommutativityError(
                f"generators {labels[i]} and {labels[j]} do not Poisson-commute"
            )
    return fam


def _products(fam: ShiftFamily, n: int) -> list[SparsePoly]:
    gens, degs = fam.generators, fam.degrees
    order = sorted(range(len(gens)), key=lambda i: (degs[i], i))
    out = []
    cache: dict = {}

    def rec(pos, remaining, acc_key, acc):
        if remaining == 0:
            out.append(acc)
            return
        for idx in range(pos, len(order)):
            g = order[idx]
            if degs[g] <= remaining:
                key = acc_key + (g,)
                nxt = cache.get(key)
                if nxt is None:
                    nxt = gens[g] if acc is None else acc * gens[g]
                    cache[key] = nxt
                rec(idx, remaining - degs[g], key, nxt)

    rec(0, n, (), None)
    if n == 0:
        return [SparsePoly.constant(1, fam.lie.dim)]
    return out


def a_mu_slice(fam: ShiftFamily, n: int) -> SubspaceMatrix:
    """All products of generators with total degree ``n``, as rows over S^n."""
    monos = monomials_of_degree(fam.lie.dim, n)
    return SubspaceMatrix.from_polys(monos, _products(fam, n), degree=n)


def a_mu_graded_dim(fam: ShiftFamily, n: int) -> int:
    """``dim A_mu ∩ S^n(g)``; raises if the products are linearly dependent."""
    mat = a_mu_slice(fam, n)
    expected = free_monomial_count(fam.degrees, n)
    r = mat.rank()
    if r < expected:
        raise DependentGenerators(
            f"degree {n}: span of generator products has dim {r} < {expected}"
        )
    return r


def sample_regular(rs, rng: random.Random, low: int = -9, high: int = 9) -> CartanVector:
    """Uniform integer coordinates, rejected until regular."""
    while True:
        mu = cartan_vector(rng.randint(low, high) for _ in range(rs.rank))
        if rs.is_regular(mu):
            return mu


def sample_nonvanishing(rs, rng: random.Random, low: int = -9, high: int = 9) -> CartanVector:
    """Cartan element with ``<alpha, h> != 0`` for every root (same rule as mu)."""
    return sample_regular(rs, rng, low, high)


def fraction_strings(v: Sequence[Fraction]) -> list[str]:
    return [str(Fraction(x)) for x in v]
