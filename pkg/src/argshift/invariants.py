"""The Poisson center S(g)^g, degree by degree."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .chevalley import LieAlgebraBasis, build_lie_algebra
from .errors import InvariantBookkeepingError
from .linalg import Echelon, SubspaceMatrix, map_kernel
from .polyring import SparsePoly, monomials_of_degree, pencil, poisson_bracket, weight


def degree_table(family: str, rank: int) -> list[int]:
    """Degrees of the basic invariants (exponents plus one)."""
    l = rank
    if family == "A":
        return list(range(2, l + 2))
    if family in "BC":
        return list(range(2, 2 * l + 1, 2))
    if family == "D":
        return sorted(list(range(2, 2 * l - 1, 2)) + [l])
    return {
        "G2": [2, 6],
        "F4": [2, 6, 8, 12],
        "E6": [2, 5, 6, 8, 9, 12],
        "E7": [2, 6, 8, 10, 12, 14, 18],
        "E8": [2, 8, 12, 14, 18, 20, 24, 30],
    }[f"{family}{rank}"]


def free_monomial_count(degrees, n: int) -> int:
    """Number of monomials of weighted degree ``n`` in free variables of the given degrees."""
    counts = [1] + [0] * n
    for d in degrees:
        for k in range(d, n + 1):
            counts[k] += counts[k - d]
    return counts[n]


def ad_invariant_space(lie: LieAlgebraBasis, n: int, full: bool = False) -> SubspaceMatrix:
    """Basis (RREF over all degree-``n`` monomials) of S^n(g)^g.

    The default route restricts to weight-zero monomials, which is the
    kernel of the Cartan action, and then intersects the kernels of the
    simple root vectors ``e_{+-alpha_i}`` (they generate g).  ``full=True``
    stacks the maps of every basis element over all monomials instead.
    """
    dim = lie.dim
    monos = monomials_of_degree(dim, n)
    br = pencil(lie, 1)
    if full:
        gens = list(range(dim))
        source = monos
    else:
        gens = []
        for i in range(lie.rank):
            simple = tuple(1 if j == i else 0 for j in range(lie.rank))
            gens.append(lie.root_index(simple))
            gens.append(lie.root_index(tuple(-k for k in simple)))
        zero = (0,) * lie.rank
        source = [m for m in monos if weight(m, lie) == zero]
    xs = [SparsePoly.var(g, dim) for g in gens]

    def images(m):
        f = SparsePoly.monomial(m)
        return [poisson_bracket(x, f, br) for x in xs]

    ker = map_kernel(source, images, degree=n)
    full_basis = SubspaceMatrix(monos, degree=n)
    full_basis.rows = [full_basis.vector(p) for p in ker.to_polys()]
    return full_basis


@dataclass
class InvariantGeneratorSet:
    type: str
    degrees: list[int]
    generators: list[SparsePoly]
    dims_by_degree: dict[int, int] = field(default_factory=dict)

    def to_json(self, names) -> dict:
        return {
            "type": self.type,
            "degrees": list(self.degrees),
            "dims_by_degree": {str(k): v for k, v in sorted(self.dims_by_degree.items())},
            "generators": [g.to_json(names) for g in self.generators],
        }


def _products(gens: list[SparsePoly], degs: list[int], d: int) -> list[SparsePoly]:
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(acc)
            return
        for i in range(start, len(gens)):
            if degs[i] <= remaining:
                rec(i, remaining - degs[i], gens[i] if acc is None else acc * gens[i])

    rec(0, d, None)
    return out


@lru_cache(maxsize=None)
def _extract_cached(label: str, max_degree: int) -> InvariantGeneratorSet:
    lie = build_lie_algebra(label)
    return _extract(lie, max_degree)


def extract_generators(lie: LieAlgebraBasis | str, max_degree: int | None = None) -> InvariantGeneratorSet:
    """Basic invariants Phi_1..Phi_l, new invariants chosen degree by degree.

    In each degree the RREF basis of S^d(g)^g is reduced against the span of
    products of earlier generators; the basis vectors that survive, in
    pivot order, become the new generators.
    """
    if isinstance(lie, str):
        lie = build_lie_algebra(lie)
    rs = lie.rs
    table = degree_table(rs.family, rs.rank)
    if max_degree is None:
        max_degree = max(table)
    if max_degree < max(table):
        raise InvariantBookkeepingError(
            f"max_degree {max_degree} is below the top invariant degree {max(table)} of {rs.label}"
        )
    return _extract_cached(rs.label, max_degree)


def _extract(lie: LieAlgebraBasis, max_degree: int) -> InvariantGeneratorSet:
    rs = lie.rs
    table = degree_table(rs.family, rs.rank)
    gens: list[SparsePoly] = []
    degs: list[int] = []
    dims = {}
    for d in range(1, max_degree + 1):
        space = ad_invariant_space(lie, d)
        dims[d] = space.rank()
        ech = Echelon()
        for p in _products(gens, degs, d):
            ech.insert(space.vector(p))
        for row in space.rows:
            if ech.insert(row):
                gens.append(space.poly(row))
                degs.append(d)
        expected = table.count(d)
        if degs.count(d) != expected:
            raise InvariantBookkeepingError(
                f"{rs.label}: found {degs.count(d)} new invariants in degree {d}, expected {expected}"
            )
    return InvariantGeneratorSet(rs.label, degs, gens, dims)
