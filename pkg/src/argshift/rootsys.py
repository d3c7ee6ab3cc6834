"""Finite crystallographic root systems.

Roots are integer coordinate tuples in the simple-root basis.  Cartan
elements (``CartanVector``) are tuples of rationals giving coordinates in
the basis ``h_{alpha_1}, ..., h_{alpha_l}`` where ``h_alpha`` is the image of
``alpha`` under the identification of h* with h through the invariant form.
With that convention ``<alpha, x> = k^T G c`` for ``alpha = sum k_i alpha_i``
and ``x = sum c_j h_{alpha_j}``, ``G`` being the Gram matrix of the simple
roots (long roots have squared length 2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from .errors import DimensionMismatch, NotARoot, UnsupportedType

Root = Tuple[int, ...]
CartanVector = Tuple[Fraction, ...]

# Types exercised by the test matrix; the construction itself is generic.
TESTED_TYPES = ("A1", "A2", "A3", "B2", "C2", "G2")

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix with ``a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``.

    Bourbaki numbering.  Raises :class:`UnsupportedType` for anything that is
    not a finite reduced type.
    """
    family = family.upper()
    l = rank
    valid = {
        "A": l >= 1,
        "B": l >= 2,
        "C": l >= 2,
        "D": l >= 4,
        "E": l in (6, 7, 8),
        "F": l == 4,
        "G": l == 2,
    }
    if not valid.get(family, False):
        raise UnsupportedType(f"unsupported type {family}{rank}")
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family in "ABC":
        for i in range(l - 1):
            link(i, i + 1)
        if family == "B":
            link(l - 2, l - 1, -1, -2)
        elif family == "C":
            link(l - 2, l - 1, -2, -1)
    elif family == "D":
        for i in range(l - 2):
            link(i, i + 1)
        link(l - 3, l - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, l - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "G":
        link(0, 1, -3, -1)
    return a


def _symmetrize(a: list[list[int]]) -> list[list[Fraction]]:
    """Gram matrix of the simple roots with long roots of squared length 2."""
    l = len(a)
    half_norm = [None] * l  # (alpha_i, alpha_i) / 2
    half_norm[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(l):
            if a[i][j] != 0 and i != j and half_norm[j] is None:
                # d_i a_ij = d_j a_ji
                half_norm[j] = half_norm[i] * a[i][j] / a[j][i]
                stack.append(j)
    top = max(half_norm)
    half_norm = [d / top for d in half_norm]
    return [[half_norm[i] * a[i][j] for j in range(l)] for i in range(l)]


def _height_key(root: Root):
    # graded by height; within a height, larger leading coordinates first
    return (sum(root), tuple(-k for k in root))


def close_positive_roots(a: Sequence[Sequence[int]]) -> list[Root]:
    """Positive roots by alpha-string closure from the simple roots."""
    l = len(a)
    simple = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
    known = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(l):
                # p = length of the alpha_i-string below beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * a[i][j] for j in range(l))
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        nxt.add(up)
        known.update(nxt)
        layer = sorted(nxt, key=_height_key)
    return sorted(known, key=_height_key)


@dataclass(frozen=True)
class RootSystemData:
    family: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    gram: Tuple[Tuple[Fraction, ...], ...]
    positive: Tuple[Root, ...]
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        index = {r: i for i, r in enumerate(self.positive)}
        object.__setattr__(self, "_index", index)

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def n_positive(self) -> int:
        return len(self.positive)

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive)

    @property
    def simple(self) -> list[Root]:
        return list(self.positive[: self.rank])

    @property
    def highest_root(self) -> Root:
        return self.positive[-1]

    def roots(self) -> list[Root]:
        return [tuple(-k for k in r) for r in self.positive] + list(self.positive)

    def is_root(self, root: Sequence[int]) -> bool:
        root = tuple(root)
        if root in self._index:
            return True
        return tuple(-k for k in root) in self._index

    def positive_index(self, root: Sequence[int]) -> int:
        return self._index[tuple(root)]

    def inner(self, r: Sequence, s: Sequence) -> Fraction:
        g = self.gram
        l = self.rank
        return sum(
            (Fraction(r[i]) * g[i][j] * s[j] for i in range(l) for j in range(l)),
            Fraction(0),
        )

    def norm(self, root: Sequence[int]) -> Fraction:
        return self.inner(root, root)

    def pairing(self, alpha: Sequence[int], x: Sequence) -> Fraction:
        """``<alpha, x>`` for a root ``alpha`` and a CartanVector ``x``."""
        if not self.is_root(alpha):
            raise NotARoot(f"{tuple(alpha)} is not a root of {self.label}")
        if len(x) != self.rank:
            raise DimensionMismatch(
                f"Cartan vector of length {len(x)} for rank {self.rank}"
            )
        return self.inner(alpha, x)

    def vanishing_root(self, mu: Sequence) -> Root | None:
        for alpha in self.positive:
            if self.inner(alpha, mu) == 0:
                return alpha
        return None

    def is_regular(self, mu: Sequence) -> bool:
        return len(mu) == self.rank and self.vanishing_root(mu) is None

    def to_json(self) -> dict:
        return {
            "type": self.label,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "gram": [[str(v) for v in row] for row in self.gram],
            "positive_roots": [list(r) for r in self.positive],
        }


def parse_type(label: str) -> tuple[str, int]:
    m = _TYPE_RE.match(label or "")
    if not m:
        raise UnsupportedType(f"unsupported type {label!r}")
    family, rank = m.group(1).upper(), int(m.group(2))
    cartan_matrix(family, rank)  # validates
    return family, rank


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int | None = None) -> RootSystemData:
    """Root system of the given type; ``build_root_system("B2")`` also works."""
    if rank is None:
        family, rank = parse_type(family)
    family = family.upper()
    a = cartan_matrix(family, rank)
    gram = _symmetrize(a)
    positive = close_positive_roots(a)
    return RootSystemData(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in a),
        gram=tuple(tuple(row) for row in gram),
        positive=tuple(positive),
    )


def cartan_vector(values: Sequence) -> CartanVector:
    return tuple(Fraction(v) for v in values)
