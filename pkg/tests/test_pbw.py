import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from argshift.chevalley import build_lie_algebra
from argshift.errors import BasisMismatch
from argshift.pbw import EnvelopingAlgebra, check_quadratic_lift, commutator, gr_commutator_matches_bracket
from argshift.polyring import SparsePoly
from argshift.shift import quadratic_slice, sample_regular
from argshift.suites import random_poly

A2 = build_lie_algebra("A2")
U2 = EnvelopingAlgebra(A2)


def test_a1_straighten(a1):
    U = EnvelopingAlgebra(a1)
    e, h, f = (a1.index(n) for n in ("e[+1]", "h[1]", "e[-1]"))
    out = U.straighten([e, f])
    assert out == U.straighten([f, e]) + U.generator(h)
    assert U.straighten([f, h, e]).terms == {(1, 1, 1): 1}
    assert U.straighten([h, f]) == U.straighten([f, h]) - 2 * U.generator(f)


def test_symmetrize_examples(a1):
    U = EnvelopingAlgebra(a1)
    e, h, f = (SparsePoly.var(a1.index(n), 3) for n in ("e[+1]", "h[1]", "e[-1]"))
    assert U.symmetrize(e) == U.generator(2)
    assert U.symmetrize(e * f) == U.straighten([0, 2]) + Fraction(1, 2) * U.generator(1)
    assert U.symmetrize(h * h) == U.straighten([1, 1])
    with pytest.raises(BasisMismatch):
        U.symmetrize(SparsePoly.var(0, 8))


words = st.lists(st.integers(0, 7), max_size=3)


@settings(max_examples=40, deadline=None)
@given(words, words, words)
def test_associativity(a, b, c):
    x, y, z = U2.straighten(a), U2.straighten(b), U2.straighten(c)
    assert (x * y) * z == x * (y * z)
    assert U2.straighten(a + b) == x * y


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7))
def test_generator_commutator_is_bracket(i, j):
    c = commutator(U2.generator(i), U2.generator(j))
    expect = U2.element({tuple(1 if q == k else 0 for q in range(8)): v for k, v in A2.brackets[i][j].items()})
    assert c == expect


@pytest.mark.parametrize("label", ["A1", "A2"])
def test_gr_sym_identity(label):
    lie = build_lie_algebra(label)
    U = EnvelopingAlgebra(lie)
    rng = random.Random(2)
    for _ in range(15):
        p = random_poly(rng, lie.dim, 4)
        top = p.homogeneous_part(p.degree)
        assert U.symmetrize(p).gr() == top


def test_gr_commutator():
    rng = random.Random(6)
    for _ in range(8):
        f = random_poly(rng, 8, 3)
        g = random_poly(rng, 8, 2)
        f, g = f.homogeneous_part(f.degree), g.homogeneous_part(g.degree)
        if f.degree >= 1 and g.degree >= 1:
            assert gr_commutator_matches_bracket(f, g, U2)


def test_quadratic_lift_and_witness(a1):
    U = EnvelopingAlgebra(a1)
    basis = quadratic_slice(a1, (Fraction(2),)).basis()
    ok, witnesses = check_quadratic_lift(basis, U)
    assert ok and witnesses == [] and len(basis) == 4
    e, f = SparsePoly.var(2, 3), SparsePoly.var(0, 3)
    ok, witnesses = check_quadratic_lift([e, f], U)
    assert not ok and witnesses[0][:2] == (0, 1)
    assert witnesses[0][2] == U.generator(1)


def test_quadratic_lift_a2():
    basis = quadratic_slice(A2, sample_regular(A2.rs, random.Random(0))).basis()
    assert len(basis) == 8
    assert check_quadratic_lift(basis, U2)[0]
