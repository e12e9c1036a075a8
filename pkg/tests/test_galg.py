from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import laurent_mul, laurent_qbinom, oracle_at, scalar_at
from qdivpow import lattice as lat
from qdivpow.galg import (AlgebraKind, Element, basis, dimension, divided_to_monomial, factor_high_divided_power,
                          generator, monomial, monomial_product, monomial_to_divided)
from qdivpow.qarith import ScalarField, qint
from qdivpow.suites import check_associativity, check_theta_commutativity

G = ScalarField.generic()
R3 = ScalarField.root_of_unity(3)
R5 = ScalarField.root_of_unity(5)
DIV = AlgebraKind.divided()
EXT = AlgebraKind.exterior()
RES3 = AlgebraKind.restricted(3)
QS = AlgebraKind.quantum_space()


def oracle_product(a, b):
    """q^(a*b) prod_i [a_i + b_i choose a_i] as an integer Laurent polynomial."""
    p = {lat.star(a, b): 1}
    for x, y in zip(a, b):
        p = laurent_mul(p, laurent_qbinom(x + y, x))
    return p


def test_monomial_values():
    assert monomial(DIV, G, (0, 0)) == Element.one(DIV, G, 2)
    assert str(monomial(RES3, R3, (2, 2))) == "x(2,2)"
    assert str(monomial(EXT, G, (1, 0, 1))) == "x(1,0,1)"
    with pytest.raises(ValueError):
        monomial(RES3, R3, (3, 0))
    with pytest.raises(ValueError):
        monomial(EXT, G, (2, 0))
    with pytest.raises(ValueError):
        monomial(DIV, G, (-1, 0))


def test_product_values():
    x10, x01 = monomial(DIV, G, (1, 0)), monomial(DIV, G, (0, 1))
    assert x10 * x10 == monomial(DIV, G, (2, 0), qint(2, G))
    assert x01 * x10 == monomial(DIV, G, (1, 1), G.q)
    assert (monomial(RES3, R3, (2, 0)) * monomial(RES3, R3, (1, 0))).is_zero()
    e1 = generator(EXT, G, 1, 2)
    assert (e1 * e1).is_zero()
    e2 = generator(EXT, G, 2, 2)
    assert e2 * e1 == (e1 * e2).scale(-G.qpow(-1))


@pytest.mark.parametrize("F", [G, R3, R5, ScalarField.root_of_unity(6)], ids=str)
def test_divided_product_matches_oracle(F):
    for a in lat.multi_indices_upto(2, 4):
        for b in lat.multi_indices_upto(2, 4):
            c = monomial_product(DIV, F, a, b)
            got = F.zero if c is None else c
            assert scalar_at(got, F) == oracle_at(oracle_product(a, b), F), (a, b)


def test_mixing_algebras_is_rejected():
    with pytest.raises(ValueError):
        monomial(DIV, G, (1, 0)) * monomial(DIV, G, (1, 0, 0))
    with pytest.raises(ValueError):
        monomial(DIV, G, (1, 0)) + monomial(EXT, G, (1, 0))


def test_restricted_kind_needs_matching_characteristic():
    with pytest.raises(ValueError):
        RES3.validate(R5)
    with pytest.raises(ValueError):
        AlgebraKind.restricted(2)


@pytest.mark.parametrize("kind,F", [(DIV, G), (EXT, G), (QS, G), (RES3, R3), (DIV, R5),
                                    (AlgebraKind.restricted(5), R5)], ids=str)
def test_associativity_and_commutation(kind, F):
    assert check_associativity(kind, F, 3, 5).ok
    assert check_theta_commutativity(kind, F, 3, 4).ok


def test_restricted_dimension_and_nilpotency():
    assert dimension(RES3, 2) == 9
    assert len(list(basis(RES3, R3, 2))) == 9
    for a in lat.box(2, 2):
        if any(a):
            assert (monomial(RES3, R3, a) ** 3).is_zero()
    assert dimension(EXT, 4) == 16
    with pytest.raises(ValueError):
        dimension(DIV, 2)


def test_restricted_truncation_drops_only_vanishing_terms():
    for a, b in product(lat.box(2, 2), repeat=2):
        full = monomial(DIV, R3, a) * monomial(DIV, R3, b)
        trunc = monomial(RES3, R3, a) * monomial(RES3, R3, b)
        if RES3.admits(lat.add(a, b)):
            assert trunc.terms == full.terms
        else:
            assert full.is_zero() and trunc.is_zero()


@pytest.mark.parametrize("F", [R3, R5], ids=str)
def test_centrality_at_odd_roots(F):
    l = F.m
    for n in (2, 3):
        for i in range(1, n + 1):
            xl = monomial(DIV, F, lat.scale(l, lat.eps(i, n)))
            for a in lat.multi_indices_upto(n, l + 2):
                xa = monomial(DIV, F, a)
                assert xl * xa == xa * xl


def test_high_power_is_not_central_at_even_order_root():
    F = ScalarField.root_of_unity(6)
    x3 = monomial(DIV, F, (3, 0))
    x2 = monomial(DIV, F, (0, 1))
    assert x3 * x2 != x2 * x3


def test_factor_high_divided_power_values():
    assert factor_high_divided_power(1, 5, 3, R3) == (2, 1, R3.one)
    assert factor_high_divided_power(1, 2, 3, R3)[:2] == (2, 0)
    m0, m1, c = factor_high_divided_power(1, 6, 3, R3)
    assert (m0, m1) == (0, 2) and c == R3.one / 2
    with pytest.raises(ValueError):
        factor_high_divided_power(1, 5, 3, R5)


def test_factor_high_divided_power_fails_at_even_order_root():
    # at q of order 6 one has [4 choose 1] = -1, so x^(1) x^(3) = -x^(4)
    with pytest.raises(ArithmeticError):
        factor_high_divided_power(1, 4, 3, ScalarField.root_of_unity(6))


def test_basis_change_values_and_relations():
    x20 = monomial(DIV, G, (2, 0))
    mono = divided_to_monomial(x20)
    assert mono.kind == QS
    assert mono.coefficient((2, 0)) == 1 / qint(2, G)
    assert monomial_to_divided(mono) == x20
    one = Element.one(DIV, G, 2)
    assert divided_to_monomial(one) == Element.one(QS, G, 2)
    x1, x2 = generator(QS, G, 1, 2), generator(QS, G, 2, 2)
    assert x2 * x1 == (x1 * x2).scale(G.q)
    with pytest.raises(ValueError):
        divided_to_monomial(monomial(DIV, R5, (1, 0)))


small = st.lists(st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-3, 3).filter(bool)),
                 max_size=4)


def elem(kind, F, terms):
    e = Element.zero(kind, F, 2)
    for a, c in terms:
        e = e + monomial(kind, F, a, c)
    return e


@settings(max_examples=60, deadline=None)
@given(small, small)
def test_basis_change_is_multiplicative(s, t):
    a, b = elem(DIV, G, s), elem(DIV, G, t)
    assert divided_to_monomial(a * b) == divided_to_monomial(a) * divided_to_monomial(b)
    assert monomial_to_divided(divided_to_monomial(a)) == a


@settings(max_examples=60, deadline=None)
@given(small, small, small)
def test_bilinearity_and_distributivity(s, t, u):
    a, b, c = (elem(DIV, R5, x) for x in (s, t, u))
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a - a).is_zero()


def test_elements_are_sparse_and_graded():
    e = monomial(DIV, G, (1, 0)) + monomial(DIV, G, (0, 2)) - monomial(DIV, G, (1, 0))
    assert e.support() == ((0, 2),)
    f = monomial(DIV, G, (1, 0)) + monomial(DIV, G, (2, 1))
    assert not f.is_homogeneous()
    assert f.degree_part(3) == monomial(DIV, G, (2, 1))
