"""Verification suites shared by the CLI and the acceptance tests.

Every suite returns a list of JSON-ready records; each record carries
``suite``, ``type`` and ``passed``.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .centralizer import degenerate_centralizer_check, verify_theorem1
from .chevalley import LieAlgebraBasis, build_lie_algebra
from .invariants import ad_invariant_space, degree_table, extract_generators, free_monomial_count
from .pbw import EnvelopingAlgebra, check_quadratic_lift, gr_commutator_matches_bracket
from .polyring import BracketPencil, SparsePoly, poisson_bracket, psi_t
from .shift import build_Q_mu, fraction_strings, quadratic_slice, sample_regular

SUITES = ("structure", "pencil", "invariants", "degenerate", "theorem1", "pbw")
PENCIL_TS = (Fraction(0), Fraction(1, 2), Fraction(1))
PSI_TS = (Fraction(1, 2), Fraction(-2), Fraction(3))


def random_poly(rng: random.Random, nvars: int, max_degree: int, nterms: int = 4, bound: int = 5) -> SparsePoly:
    terms = {}
    for _ in range(nterms):
        d = rng.randint(0, max_degree)
        m = [0] * nvars
        for _ in range(d):
            m[rng.randrange(nvars)] += 1
        terms[tuple(m)] = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return SparsePoly(terms, nvars)


def structure_checks(lie: LieAlgebraBasis) -> dict:
    """Exact checks of the basis conventions on every basis triple."""
    d = lie.dim
    B = lie.brackets
    F = lie.form

    def br_basis(u: dict, j: int) -> dict:
        out: dict = {}
        for i, c in u.items():
            for k, v in B[i][j].items():
                out[k] = out.get(k, 0) + c * v
        return out

    antisym = all(
        {k: -v for k, v in B[i][j].items()} == B[j][i] for i in range(d) for j in range(d)
    )
    jacobi = True
    invariance = True
    for i, j, k in itertools.product(range(d), repeat=3):
        if jacobi and j < k:
            acc: dict = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for m, v in br_basis(B[a][b], c).items():
                    acc[m] = acc.get(m, 0) + v
            if any(acc.values()):
                jacobi = False
        # ([x,y],z) + (y,[x,z]) = 0
        s = sum(c * F.get((m, k), 0) for m, c in B[i][j].items())
        s += sum(c * F.get((j, m), 0) for m, c in B[i][k].items())
        if s:
            invariance = False
    rs = lie.rs
    normalization = True
    pairing = True
    for alpha in rs.positive:
        ip = lie.root_index(alpha)
        ineg = lie.root_index(tuple(-k for k in alpha))
        for j in range(d):
            expected = 1 if j == ineg else 0
            if F.get((ip, j), 0) != expected:
                normalization = False
        h_alpha = [Fraction(0)] * d
        for m, c in B[ip][ineg].items():
            h_alpha[m] = c
        for a in range(lie.rank):
            h = [Fraction(0)] * lie.rank
            h[a] = Fraction(1)
            if lie.inner(h_alpha, lie.cartan_element(h)) != rs.pairing(alpha, h):
                pairing = False
    return {
        "antisymmetry": antisym,
        "jacobi": jacobi,
        "invariance": invariance,
        "normalization": normalization,
        "pairing": pairing,
    }


def structure_suite(label: str, **_) -> list[dict]:
    lie = build_lie_algebra(label)
    checks = structure_checks(lie)
    rec = {"suite": "structure", "type": lie.rs.label, "dim": lie.dim, **checks}
    rec["passed"] = all(checks.values())
    return [rec]


def jacobiator(x: SparsePoly, y: SparsePoly, z: SparsePoly, br: BracketPencil) -> SparsePoly:
    pb = poisson_bracket
    return pb(pb(x, y, br), z, br) + pb(pb(y, z, br), x, br) + pb(pb(z, x, br), y, br)


def pencil_suite(label: str, seed: int = 0, psi_pairs: int = 10, **_) -> list[dict]:
    lie = build_lie_algebra(label)
    d = lie.dim
    xs = [SparsePoly.var(i, d) for i in range(d)]
    records = []
    for t in PENCIL_TS:
        br = BracketPencil(lie, t)
        ok = all(
            not jacobiator(xs[i], xs[j], xs[k], br)
            for i, j, k in itertools.product(range(d), repeat=3)
        )
        records.append(
            {"suite": "pencil", "type": lie.rs.label, "check": "jacobi", "t": str(t),
             "triples": d ** 3, "passed": ok}
        )
    rng = random.Random(seed)
    one = BracketPencil(lie, 1)
    pairs = [(random_poly(rng, d, 3), random_poly(rng, d, 3)) for _ in range(psi_pairs)]
    mu = sample_regular(lie.rs, rng)
    Q = build_Q_mu(lie, mu)
    for t in PSI_TS:
        bt = BracketPencil(lie, t)
        ok = all(
            poisson_bracket(psi_t(f, t, lie), psi_t(g, t, lie), bt)
            == psi_t(poisson_bracket(f, g, one), t, lie)
            for f, g in pairs
        )
        q_ok = all(psi_t(q, t, lie) == q.scale(1 / (t * t)) for q in Q)
        records.append(
            {"suite": "pencil", "type": lie.rs.label, "check": "psi_t", "t": str(t),
             "pairs": len(pairs), "q_mu_stable": q_ok, "mu": fraction_strings(mu),
             "passed": ok and q_ok}
        )
    return records


def invariants_suite(label: str, nmax: int = 4, **_) -> list[dict]:
    lie = build_lie_algebra(label)
    table = degree_table(lie.rs.family, lie.rs.rank)
    records = []
    for n in range(0, nmax + 1):
        dim = ad_invariant_space(lie, n).rank()
        expected = free_monomial_count(table, n)
        records.append(
            {"suite": "invariants", "type": lie.rs.label, "n": n, "dim": dim,
             "expected": expected, "passed": dim == expected}
        )
    gens = extract_generators(lie)
    records.append(
        {"suite": "invariants", "type": lie.rs.label, "n": None, "degrees": gens.degrees,
         "expected_degrees": table, "passed": gens.degrees == table}
    )
    return records


def degenerate_suite(label: str, nmax: int = 3, seed: int = 0, retries: int = 5, **_) -> list[dict]:
    report = degenerate_centralizer_check(label, nmax, seed, retries)
    records = [
        {"suite": "degenerate", "type": report.type, **rec,
         "passed": rec["equal"] and not rec["degenerate"]}
        for rec in report.degrees
    ]
    records.append({"suite": "degenerate", "n": None, **report.to_json(), "passed": report.passed})
    return records


def theorem1_suite(label: str, nmax: int = 3, seed: int = 0, retries: int = 5, **_) -> list[dict]:
    report = verify_theorem1(label, nmax, seed, retries)
    records = [
        {"suite": "theorem1", "type": report.type, **rec,
         "passed": rec["containment"] and rec["equal"]}
        for rec in report.degrees
    ]
    records.append({"suite": "theorem1", "n": None, **report.to_json(), "passed": report.passed})
    return records


def pbw_suite(label: str, seed: int = 0, samples: int = 10, **_) -> list[dict]:
    lie = build_lie_algebra(label)
    U = EnvelopingAlgebra(lie)
    rng = random.Random(seed)
    mu = sample_regular(lie.rs, rng)
    basis = quadratic_slice(lie, mu).basis()
    ok, witnesses = check_quadratic_lift(basis, U)
    n = len(basis)
    records = [
        {"suite": "pbw", "type": lie.rs.label, "check": "quadratic_lift",
         "mu": fraction_strings(mu), "pairs_checked": n * (n - 1) // 2, "all_commute": ok,
         "witnesses": [[i, j, c.to_text()] for i, j, c in witnesses], "passed": ok}
    ]
    polys = [random_poly(rng, lie.dim, 4) for _ in range(samples)]
    gr_ok = all(U.symmetrize(p).gr() == p.homogeneous_part(p.degree) for p in polys)
    records.append(
        {"suite": "pbw", "type": lie.rs.label, "check": "gr_symmetrize", "samples": samples,
         "passed": gr_ok}
    )
    homog = [random_poly(rng, lie.dim, 3) for _ in range(2 * samples)]
    homog = [p.homogeneous_part(p.degree) for p in homog if p.degree >= 1]
    comm_ok = all(
        gr_commutator_matches_bracket(f, g, U) for f, g in zip(homog[::2], homog[1::2])
    )
    records.append(
        {"suite": "pbw", "type": lie.rs.label, "check": "gr_commutator", "samples": len(homog) // 2,
         "passed": comm_ok}
    )
    return records


RUNNERS = {
    "structure": structure_suite,
    "pencil": pencil_suite,
    "invariants": invariants_suite,
    "degenerate": degenerate_suite,
    "theorem1": theorem1_suite,
    "pbw": pbw_suite,
}


def run_suite(name: str, label: str, **kwargs) -> list[dict]:
    return RUNNERS[name](label, **kwargs)
