"""Poisson centralizers of quadratic subspaces, degree by degree."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chevalley import LieAlgebraBasis, build_lie_algebra
from .errors import InhomogeneousInput, NotInSpan, RetryExhausted
from .invariants import extract_generators, free_monomial_count
from .linalg import SubspaceMatrix, map_kernel
from .polyring import (
    BracketPencil,
    GammaFunctional,
    SparsePoly,
    monomials_of_degree,
    poisson_bracket,
)
from .shift import (
    a_mu_slice,
    build_Q_mu,
    build_shift_family,
    fraction_strings,
    q_element,
    quadratic_slice,
    sample_nonvanishing,
    sample_regular,
)

DEFAULT_RETRIES = 5


def poisson_centralizer(Q: Sequence[SparsePoly], n: int, br: BracketPencil) -> SubspaceMatrix:
    """``{f in S^n(g) : {q, f}_t = 0 for all q in Q}`` as an RREF basis.

    ``{q, f}_t = t {q, f}_1 + (1-t) {q, f}_0`` and the two parts live in
    different degrees, so the kernel is the intersection of both kernels.
    """
    for q in Q:
        if not q.is_homogeneous():
            raise InhomogeneousInput(f"element of degrees {q.degrees()} in the centralized set")
    lie = br.lie
    maps = []
    if br.t != 0:
        maps.append(BracketPencil(lie, 1, br.gamma))
    if br.t != 1:
        maps.append(BracketPencil(lie, 0, br.gamma))
    Q = [q for q in Q if q]

    def images(m):
        f = SparsePoly.monomial(m)
        return [poisson_bracket(q, f, b) for b in maps for q in Q]

    return map_kernel(monomials_of_degree(lie.dim, n), images, degree=n)


def _pair_coefficients(q: SparsePoly, lie: LieAlgebraBasis) -> dict:
    """Coefficients of ``e_alpha e_{-alpha}`` in q, keyed by positive root."""
    out = {}
    for m, c in q.terms.items():
        idx = [i for i, e in enumerate(m) if e]
        if sum(m) != 2 or len(idx) != 2:
            raise NotInSpan("q has a term outside span{e_alpha e_-alpha}")
        a, b = (lie.roots[i] for i in idx)
        if a is None or b is None or any(x + y for x, y in zip(a, b)):
            raise NotInSpan("q has a term outside span{e_alpha e_-alpha}")
        out[a if any(k > 0 for k in a) else b] = c
    return out


def monomial_eigenvalue(
    m: Sequence[int],
    q: SparsePoly,
    lie: LieAlgebraBasis,
    mu: Sequence,
    h: Sequence,
    gamma: GammaFunctional | None = None,
) -> Fraction:
    """lambda with ``{q, m}_gamma = lambda * m`` for ``q = q_h(mu)``.

    ``lambda = sum_{alpha>0} gamma(h_alpha) <alpha,h>/<alpha,mu> (n_{-alpha} - n_alpha)``.
    """
    gamma = gamma if gamma is not None else GammaFunctional.standard(lie)
    coeffs = _pair_coefficients(q, lie)
    rs = lie.rs
    lam = Fraction(0)
    for alpha in rs.positive:
        ratio = rs.inner(alpha, h) / rs.inner(alpha, mu)
        if coeffs.get(alpha, 0) != ratio:
            raise NotInSpan(f"q is not the element q_h(mu): mismatch at root {list(alpha)}")
        if not ratio:
            continue
        i_pos = lie.root_index(alpha)
        i_neg = lie.root_index(tuple(-k for k in alpha))
        diff = m[i_neg] - m[i_pos]
        if diff:
            h_alpha = lie.brackets[i_pos][i_neg]
            lam += gamma.of_dict(h_alpha) * ratio * diff
    return lam


def is_balanced(m: Sequence[int], lie: LieAlgebraBasis) -> bool:
    for alpha in lie.rs.positive:
        if m[lie.root_index(alpha)] != m[lie.root_index(tuple(-k for k in alpha))]:
            return False
    return True


def degenerate_report(lie: LieAlgebraBasis, mu: Sequence, h: Sequence, n: int, centralizer: bool = True) -> dict:
    """Balanced/unbalanced split of S^n(g) under ``{q, .}_gamma``."""
    q = q_element(lie, mu, h)
    monos = monomials_of_degree(lie.dim, n)
    balanced = 0
    zero_unbalanced = []
    for m in monos:
        if is_balanced(m, lie):
            balanced += 1
        elif monomial_eigenvalue(m, q, lie, mu, h) == 0:
            zero_unbalanced.append(SparsePoly.monomial(m).to_text(lie.names))
    rec = {
        "n": n,
        "monomials": len(monos),
        "balanced": balanced,
        "unbalanced": len(monos) - balanced,
        "zero_unbalanced": zero_unbalanced,
        "degenerate": bool(zero_unbalanced),
    }
    if centralizer:
        dim = poisson_centralizer([q], n, BracketPencil(lie, 0)).rank()
        rec["dim_centralizer"] = dim
        rec["equal"] = dim == balanced
    return rec


@dataclass
class DegenerateReport:
    type: str
    mu: list
    h: list
    seed: int
    degrees: list = field(default_factory=list)
    resamples: int = 0

    @property
    def passed(self) -> bool:
        return all(d["equal"] and not d["degenerate"] for d in self.degrees)

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "mu": fraction_strings(self.mu),
            "h": fraction_strings(self.h),
            "seed": self.seed,
            "degrees": self.degrees,
            "resamples": self.resamples,
        }


def degenerate_centralizer_check(
    lie: LieAlgebraBasis | str, n_max: int, seed: int = 0, retries: int = DEFAULT_RETRIES
) -> DegenerateReport:
    """Sample (mu, h) until no unbalanced monomial of degree <= n_max is annihilated."""
    if isinstance(lie, str):
        lie = build_lie_algebra(lie)
    rng = random.Random(seed)
    offending = []
    for attempt in range(retries + 1):
        mu = sample_regular(lie.rs, rng)
        h = sample_nonvanishing(lie.rs, rng)
        recs = [degenerate_report(lie, mu, h, n, centralizer=False) for n in range(1, n_max + 1)]
        offending = [z for r in recs for z in r["zero_unbalanced"]]
        if not offending:
            report = DegenerateReport(lie.rs.label, list(mu), list(h), seed, resamples=attempt)
            report.degrees = [degenerate_report(lie, mu, h, n) for n in range(1, n_max + 1)]
            return report
    raise RetryExhausted(
        f"every sampled (mu, h) annihilated an unbalanced monomial after {retries} resamples",
        offending=offending,
    )


@dataclass
class TheoremOneReport:
    type: str
    rank: int
    mu: list
    seed: int
    degrees: list = field(default_factory=list)
    resamples: int = 0

    @property
    def passed(self) -> bool:
        return all(d["containment"] and d["equal"] for d in self.degrees)

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "mu": fraction_strings(self.mu),
            "seed": self.seed,
            "degrees": self.degrees,
            "resamples": self.resamples,
        }


def theorem1_degree(lie, fam, Q, n) -> dict:
    A = a_mu_slice(fam, n)
    dim_a = A.rank()
    C = poisson_centralizer(Q, n, BracketPencil(lie, 1))
    dim_c = C.rank()
    containment = all(C.contains(p) for p in A.to_polys())
    independent = dim_a == free_monomial_count(fam.degrees, n)
    return {
        "n": n,
        "dim_centralizer": dim_c,
        "dim_a_mu": dim_a,
        "containment": containment,
        "equal": containment and independent and dim_c == dim_a,
    }


def verify_theorem1(
    type_label: str,
    n_max: int,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
    mu: Sequence | None = None,
    full_slice: bool = False,
) -> TheoremOneReport:
    """Check ``A_mu ∩ S^n = centralizer of Q_mu in S^n`` for ``1 <= n <= n_max``.

    With ``mu=None`` mu is sampled from ``seed`` and resampled on failure;
    an explicit mu is checked once.  ``full_slice`` centralizes
    ``Q_mu + h + S^2(h)`` instead of Q_mu alone.
    """
    lie = build_lie_algebra(type_label)
    gens = extract_generators(lie)
    rng = random.Random(seed)
    report = None
    attempts = 1 if mu is not None else retries + 1
    for attempt in range(attempts):
        mu_i = tuple(Fraction(x) for x in mu) if mu is not None else sample_regular(lie.rs, rng)
        Q = build_Q_mu(lie, mu_i)
        if full_slice:
            sl = quadratic_slice(lie, mu_i)
            Q = sl.cartan + sl.cartan_squares + sl.q_mu
        fam = build_shift_family(lie, mu_i, gens)
        report = TheoremOneReport(lie.rs.label, lie.rank, list(mu_i), seed, resamples=attempt)
        report.degrees = [theorem1_degree(lie, fam, Q, n) for n in range(1, n_max + 1)]
        if report.passed:
            return report
    if mu is not None:
        return report
    raise RetryExhausted(
        f"centralizer equality failed for {attempts} sampled mu", report=report
    )
