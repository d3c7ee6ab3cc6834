"""Acceptance criteria, one marked group per criterion.

The terminal summary prints one PASS/FAIL line per criterion.
"""

import itertools
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from argshift.centralizer import (
    degenerate_centralizer_check, is_balanced, monomial_eigenvalue, verify_theorem1,
)
from argshift.chevalley import build_lie_algebra
from argshift.invariants import ad_invariant_space, extract_generators, free_monomial_count
from argshift.pbw import EnvelopingAlgebra, check_quadratic_lift, gr_commutator_matches_bracket
from argshift.polyring import BracketPencil, SparsePoly, monomials_of_degree, pencil, poisson_bracket, psi_t
from argshift.shift import build_Q_mu, build_shift_family, check_commutative, q_element, quadratic_slice, sample_regular
from argshift.suites import jacobiator, random_poly, structure_checks

from oracles import series_count


@pytest.mark.acceptance(1, "structure soundness A1 A2 A3 B2 C2 G2")
@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "C2", "G2"])
def test_ac1_structure(label):
    checks = structure_checks(build_lie_algebra(label))
    assert checks == {k: True for k in ("antisymmetry", "jacobi", "invariance", "normalization", "pairing")}


@pytest.mark.acceptance(2, "pencil Jacobiator vanishes at t = 0, 1/2, 1 (A2, B2)")
@pytest.mark.parametrize("label", ["A2", "B2"])
@pytest.mark.parametrize("t", [Fraction(0), Fraction(1, 2), Fraction(1)])
def test_ac2_pencil_jacobi(label, t):
    lie = build_lie_algebra(label)
    br = BracketPencil(lie, t)
    xs = [SparsePoly.var(i, lie.dim) for i in range(lie.dim)]
    for i, j, k in itertools.product(range(lie.dim), repeat=3):
        assert not jacobiator(xs[i], xs[j], xs[k], br), (i, j, k)


@pytest.mark.acceptance(3, "psi_t intertwines brackets; Q_mu scales by t^-2 (A2)")
@pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(-2), Fraction(3)])
def test_ac3_psi(t):
    lie = build_lie_algebra("A2")
    rng = random.Random(2024)
    one, bt = pencil(lie, 1), BracketPencil(lie, t)
    for _ in range(100):
        f, g = random_poly(rng, lie.dim, 3), random_poly(rng, lie.dim, 3)
        lhs = poisson_bracket(psi_t(f, t, lie), psi_t(g, t, lie), bt)
        assert lhs == psi_t(poisson_bracket(f, g, one), t, lie)
    for _ in range(5):
        for q in build_Q_mu(lie, sample_regular(lie.rs, rng)):
            assert psi_t(q, t, lie) == q.scale(1 / (t * t))


@pytest.mark.acceptance(4, "{q, m}_gamma = lambda m for all monomials of degree <= 3 (A2)")
def test_ac4_monomial_eigenvalues():
    lie = build_lie_algebra("A2")
    rng = random.Random(4)
    br = BracketPencil(lie, 0)
    monos = [m for n in range(4) for m in monomials_of_degree(lie.dim, n)]
    for _ in range(20):
        mu, h = sample_regular(lie.rs, rng), sample_regular(lie.rs, rng)
        q = q_element(lie, mu, h)
        for m in monos:
            mono = SparsePoly.monomial(m)
            lam = monomial_eigenvalue(m, q, lie, mu, h)
            assert poisson_bracket(q, mono, br) == mono.scale(lam)
            if is_balanced(m, lie):
                assert lam == 0


@pytest.mark.acceptance(5, "degenerate centralizer = balanced monomials (A1 n<=4, A2 n<=3)")
@pytest.mark.parametrize("label,nmax", [("A1", 4), ("A2", 3)])
def test_ac5_degenerate(label, nmax):
    report = degenerate_centralizer_check(label, nmax, seed=0)
    assert [d["n"] for d in report.degrees] == list(range(1, nmax + 1))
    for d in report.degrees:
        assert not d["degenerate"]
        assert d["dim_centralizer"] == d["balanced"]


@pytest.mark.acceptance(6, "shift generators Poisson-commute (A1 A2 B2, 3 mu each)")
@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_ac6_commutativity(label):
    lie = build_lie_algebra(label)
    gens = extract_generators(lie)
    rng = random.Random(6)
    for _ in range(3):
        fam = build_shift_family(lie, sample_regular(lie.rs, rng), gens, check=False)
        assert check_commutative(fam.generators, lie) == []


@pytest.mark.acceptance(7, "centralizer of Q_mu equals A_mu (A1 n<=4, A2 n<=3, B2 n<=3)")
@pytest.mark.parametrize("label,nmax,expected", [
    ("A1", 4, [1, 2, 2, 3]),
    ("A2", 3, None),
    ("B2", 3, None),
])
def test_ac7_theorem1(label, nmax, expected):
    report = verify_theorem1(label, nmax, seed=7, retries=5)
    assert report.resamples <= 5
    dims = [d["dim_centralizer"] for d in report.degrees]
    for d in report.degrees:
        assert d["containment"] and d["equal"]
        assert d["dim_centralizer"] == d["dim_a_mu"]
    if expected:
        assert dims == expected
    if label == "A2":
        assert dims[1] == 5


@pytest.mark.acceptance(8, "invariant dimensions match the counting series; degrees {2},{2,3},{2,4}")
@pytest.mark.parametrize("label,nmax,degrees", [("A1", 6, [2]), ("A2", 6, [2, 3]), ("B2", 4, [2, 4])])
def test_ac8_invariants(label, nmax, degrees):
    lie = build_lie_algebra(label)
    for n in range(nmax + 1):
        assert ad_invariant_space(lie, n).rank() == series_count(degrees, n) == free_monomial_count(degrees, n)
    assert extract_generators(lie).degrees == degrees


@pytest.mark.acceptance(9, "PBW: gr o sym = id, gr of commutators, quadratic lift (A1, A2)")
@pytest.mark.parametrize("label", ["A1", "A2"])
def test_ac9_pbw(label):
    lie = build_lie_algebra(label)
    U = EnvelopingAlgebra(lie)
    rng = random.Random(9)
    for _ in range(100):
        p = random_poly(rng, lie.dim, 4)
        assert U.symmetrize(p).gr() == p.homogeneous_part(p.degree)
    checked = 0
    while checked < 20:
        f, g = random_poly(rng, lie.dim, 3), random_poly(rng, lie.dim, 3)
        f, g = f.homogeneous_part(f.degree), g.homogeneous_part(g.degree)
        if f.degree < 1 or g.degree < 1:
            continue
        assert gr_commutator_matches_bracket(f, g, U)
        checked += 1
    basis = quadratic_slice(lie, sample_regular(lie.rs, rng)).basis()
    assert len(basis) == {"A1": 4, "A2": 8}[label]
    ok, witnesses = check_quadratic_lift(basis, U)
    assert ok and not witnesses


@pytest.mark.acceptance(10, "verify all --type A2 --seed 7 is byte-identical across runs")
def test_ac10_determinism(tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"run{i}.jsonl"
        res = subprocess.run(
            [sys.executable, "-m", "argshift", "verify", "all", "--type", "A2", "--seed", "7", "--out", str(path)],
            capture_output=True,
        )
        assert res.returncode == 0, res.stdout
        outs.append(path.read_bytes())
    assert outs[0] == outs[1] and outs[0]
