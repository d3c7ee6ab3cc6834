import random
from fractions import Fraction

import pytest

import argshift.centralizer as cz
from argshift.centralizer import (
    degenerate_centralizer_check, degenerate_report, is_balanced, monomial_eigenvalue,
    poisson_centralizer, verify_theorem1,
)
from argshift.chevalley import build_lie_algebra
from argshift.errors import InhomogeneousInput, NonRegularError, NotInSpan, RetryExhausted
from argshift.polyring import BracketPencil, SparsePoly, monomials_of_degree, pencil, poisson_bracket
from argshift.shift import build_Q_mu, q_element, sample_regular


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_small_degree_centralizers(label):
    lie = build_lie_algebra(label)
    l = lie.rank
    Q = build_Q_mu(lie, sample_regular(lie.rs, random.Random(1)))
    br = pencil(lie, 1)
    assert poisson_centralizer(Q, 0, br).rank() == 1
    assert poisson_centralizer(Q, 1, br).rank() == l
    assert poisson_centralizer(Q, 2, br).rank() == l * (l + 1) // 2 + l


def test_inhomogeneous(a1):
    x = SparsePoly.var(0, 3)
    with pytest.raises(InhomogeneousInput):
        poisson_centralizer([x * x + x], 2, pencil(a1, 1))


def test_eigenvalue_examples(a2):
    mu, h = (Fraction(1), Fraction(3)), (Fraction(2), Fraction(-1))
    q = q_element(a2, mu, h)
    rs = a2.rs
    for alpha in rs.positive:
        m = [0] * a2.dim
        m[a2.root_index(alpha)] = 1
        expect = -sum(alpha) * rs.inner(alpha, h) / rs.inner(alpha, mu)
        assert monomial_eigenvalue(m, q, a2, mu, h) == expect
        m[a2.root_index(tuple(-k for k in alpha))] = 1
        assert is_balanced(m, a2)
        assert monomial_eigenvalue(m, q, a2, mu, h) == 0


def test_eigenvalue_matches_bracket(b2):
    rng = random.Random(8)
    br = BracketPencil(b2, 0)
    for _ in range(5):
        mu, h = sample_regular(b2.rs, rng), sample_regular(b2.rs, rng)
        q = q_element(b2, mu, h)
        for m in monomials_of_degree(b2.dim, 2):
            mono = SparsePoly.monomial(m)
            lam = monomial_eigenvalue(m, q, b2, mu, h)
            assert poisson_bracket(q, mono, br) == mono.scale(lam)


def test_not_in_span(a2):
    mu, h = (Fraction(1), Fraction(3)), (Fraction(2), Fraction(-1))
    with pytest.raises(NotInSpan):
        monomial_eigenvalue([0] * 8, SparsePoly.var(3, 8) ** 2, a2, mu, h)
    q = q_element(a2, mu, h).scale(2)
    with pytest.raises(NotInSpan):
        monomial_eigenvalue([0] * 8, q, a2, mu, h)


def test_degenerate_counts(a1):
    rec = degenerate_report(a1, (Fraction(1),), (Fraction(2),), 1)
    assert rec["balanced"] == 1 and rec["unbalanced"] == 2 and not rec["degenerate"]
    rec = degenerate_report(a1, (Fraction(1),), (Fraction(2),), 2)
    # h^2 and e f
    assert rec["balanced"] == 2 and rec["dim_centralizer"] == 2 and rec["equal"]


def test_degenerate_a2_first_degree(a2):
    rec = degenerate_report(a2, (Fraction(1), Fraction(3)), (Fraction(2), Fraction(-1)), 1)
    assert rec["unbalanced"] == 2 * a2.rs.n_positive
    assert rec["zero_unbalanced"] == []


def test_retry_exhausted(monkeypatch, a2):
    # h proportional to mu: e_{a1} e_{-a2} has eigenvalue 0
    monkeypatch.setattr(cz, "sample_nonvanishing", lambda rs, rng: (Fraction(1), Fraction(1)))
    monkeypatch.setattr(cz, "sample_regular", lambda rs, rng: (Fraction(1), Fraction(1)))
    with pytest.raises(RetryExhausted) as info:
        degenerate_centralizer_check(a2, 2, seed=0, retries=2)
    assert info.value.offending


def test_theorem1_a1():
    report = verify_theorem1("A1", 4, seed=7)
    assert report.passed
    assert [d["dim_centralizer"] for d in report.degrees] == [1, 2, 2, 3]
    assert report.to_json()["degrees"][0]["n"] == 1


def test_theorem1_explicit_mu():
    report = verify_theorem1("A2", 2, mu=(1, 1))
    assert report.passed and report.degrees[1]["dim_a_mu"] == 5
    with pytest.raises(NonRegularError):
        verify_theorem1("A2", 2, mu=(1, 2))


def test_theorem1_full_slice_agrees():
    a = verify_theorem1("A2", 2, seed=3)
    b = verify_theorem1("A2", 2, seed=3, full_slice=True)
    assert a.passed and b.passed
    assert [d["dim_centralizer"] for d in a.degrees] == [d["dim_centralizer"] for d in b.degrees]


def test_determinism():
    assert verify_theorem1("B2", 2, seed=5).to_json() == verify_theorem1("B2", 2, seed=5).to_json()
    a = degenerate_centralizer_check("A2", 2, seed=5).to_json()
    assert a == degenerate_centralizer_check("A2", 2, seed=5).to_json()
