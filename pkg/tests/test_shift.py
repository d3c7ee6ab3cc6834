import math
import random
from fractions import Fraction

import pytest

from argshift.chevalley import build_lie_algebra
from argshift.errors import InvalidParameter, NonRegularError
from argshift.invariants import extract_generators
from argshift.linalg import SubspaceMatrix
from argshift.polyring import SparsePoly, monomials_of_degree, pencil, poisson_bracket, psi_t
from argshift.shift import (
    a_mu_graded_dim, a_mu_slice, build_Q_mu, build_shift_family, directional_derivative,
    quadratic_slice, sample_regular,
)

from oracles import dense_rank


def test_derivative_orders(a2):
    phi = extract_generators(a2).generators[1]
    mu = (Fraction(2), Fraction(-1, 3))
    assert directional_derivative(phi, mu, 0, a2) == phi
    top = directional_derivative(phi, mu, 3, a2)
    # d^deg phi is deg! * phi evaluated at mu viewed in g*
    assert top == SparsePoly.constant(math.factorial(3) * phi.evaluate(a2.functional(mu)), a2.dim)
    assert not directional_derivative(phi, mu, 4, a2)
    with pytest.raises(InvalidParameter):
        directional_derivative(phi, mu, -1, a2)


def test_a1_casimir_derivative(a1):
    # C = h^2/4 + e f, (mu, h) = 2c for mu = c h  =>  d_mu C = c h
    c_poly = extract_generators(a1).generators[0]
    scale = c_poly.coefficient((1, 0, 1))
    h = SparsePoly.var(a1.index("h[1]"), 3)
    for c in (Fraction(1), Fraction(-3, 5)):
        assert directional_derivative(c_poly, (c,), 1, a1) == h.scale(c * scale)


def test_q_mu_a1(a1):
    mu = (Fraction(3),)
    (q,) = build_Q_mu(a1, mu)
    # <a,h1>/<a,mu> = 2 / 6
    assert q == SparsePoly({(1, 0, 1): Fraction(1, 3)}, 3)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_q_mu_span_and_commutation(label):
    lie = build_lie_algebra(label)
    mu = sample_regular(lie.rs, random.Random(2))
    Q = build_Q_mu(lie, mu)
    monos = monomials_of_degree(lie.dim, 2)
    cols = {m: i for i, m in enumerate(monos)}
    assert dense_rank([{cols[m]: c for m, c in q.terms.items()} for q in Q], len(monos)) == lie.rank
    br = pencil(lie, 1)
    assert all(not poisson_bracket(a, b, br) for a in Q for b in Q)


def test_non_regular(a2):
    with pytest.raises(NonRegularError) as info:
        build_Q_mu(a2, (1, 2))
    assert info.value.root == (1, 0)
    with pytest.raises(NonRegularError):
        build_shift_family(a2, (0, 0), extract_generators(a2))


@pytest.mark.parametrize(
    "label,degrees", [("A1", [1, 2]), ("A2", [1, 1, 2, 2, 3]), ("B2", [1, 1, 2, 2, 3, 4])]
)
def test_family_counts(label, degrees):
    lie = build_lie_algebra(label)
    mu = sample_regular(lie.rs, random.Random(4))
    fam = build_shift_family(lie, mu, extract_generators(lie))
    assert sorted(fam.degrees) == degrees
    assert fam.count == (lie.dim + lie.rank) // 2


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_low_graded_dims(label):
    lie = build_lie_algebra(label)
    l = lie.rank
    mu = sample_regular(lie.rs, random.Random(9))
    fam = build_shift_family(lie, mu, extract_generators(lie))
    assert a_mu_graded_dim(fam, 1) == l
    assert a_mu_graded_dim(fam, 2) == l * (l + 1) // 2 + l
    # degree 1 is the Cartan subalgebra; degree 2 is S^2(h) + Q_mu
    sl = quadratic_slice(lie, mu)
    one = a_mu_slice(fam, 1)
    assert all(one.contains(p) for p in sl.cartan)
    two = SubspaceMatrix.from_polys(monomials_of_degree(lie.dim, 2), sl.cartan_squares + sl.q_mu)
    assert two.rank() == a_mu_slice(fam, 2).rank()
    assert all(two.contains(p) for p in a_mu_slice(fam, 2).to_polys())


def test_a1_degree_four(a1):
    fam = build_shift_family(a1, (Fraction(2),), extract_generators(a1))
    assert [a_mu_graded_dim(fam, n) for n in range(1, 5)] == [1, 2, 2, 3]


def test_q_mu_psi_stable(a2):
    Q = build_Q_mu(a2, (Fraction(1), Fraction(3)))
    for t in (Fraction(1, 2), Fraction(-2)):
        assert all(psi_t(q, t, a2) == q.scale(1 / (t * t)) for q in Q)
