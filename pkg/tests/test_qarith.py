from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from oracles import (Q0, Q1, brute_char, cyclotomic, gaussian_by_subsets, gaussian_t, laurent_qbinom,
                     laurent_qint, oracle_at, scalar_at)
from qdivpow.qarith import (CyclotomicElement, LaurentPoly, RationalFunction, ScalarField, char_q,
                            cyclotomic_polynomial, lemma3_holds, lusztig_factorization, lusztig_sign,
                            multi_qbinom, qbinom, qbinom_lemma2, qbinom_product, qfact, qint)

G = ScalarField.generic()
ROOTS = [ScalarField.root_of_unity(m) for m in (3, 4, 5, 6, 7, 8, 10, 12)]


def lp(d):
    return G.from_laurent(d)


# --- worked values ---------------------------------------------------------

def test_qint_small_values():
    assert qint(0, G).is_zero()
    assert qint(1, G) == 1
    assert qint(3, G) == lp({2: 1, 0: 1, -2: 1})
    assert qint(-3, G) == -qint(3, G)
    assert qint(3, ScalarField.root_of_unity(6)).is_zero()


def test_qfact_small_values():
    assert qfact(0, G) == 1
    assert qfact(2, G) == lp({1: 1, -1: 1})
    assert qfact(3, G) == lp({3: 1, 1: 2, -1: 2, -3: 1})
    with pytest.raises(ValueError):
        qfact(-1, G)


def test_qbinom_small_values():
    assert qbinom(1, 2, G).is_zero()
    assert qbinom(-1, 1, G) == -1
    assert qbinom(4, 2, G) == lp({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})
    assert qbinom(3, 2, ScalarField.root_of_unity(6)).is_zero()
    assert qbinom(5, -1, G).is_zero()


def test_char_q_values():
    assert char_q(G) == 0
    assert char_q(ScalarField.root_of_unity(5)) == 5
    assert char_q(ScalarField.root_of_unity(6)) == 3


@pytest.mark.parametrize("F", ROOTS, ids=str)
def test_char_q_matches_brute_force(F):
    assert char_q(F) == brute_char(F.m)
    assert char_q(F) == (F.m if F.m % 2 else F.m // 2)


def test_lusztig_factorization_worked_values():
    F = ScalarField.root_of_unity(3)
    assert lusztig_factorization(5, 4, 3, F) == F.q + F.qpow(-1)
    assert lusztig_factorization(5, 4, 3, F) == qbinom(5, 4, F)
    assert lusztig_factorization(4, 3, 3, F) == 1
    assert lusztig_factorization(3, 3, 3, F) == 1


def test_lusztig_factorization_rejects_wrong_characteristic():
    with pytest.raises(ValueError):
        lusztig_factorization(5, 4, 5, ScalarField.root_of_unity(3))
    with pytest.raises(ValueError):
        lusztig_factorization(2, 4, 3, ScalarField.root_of_unity(3))


def test_lemma2_worked_values():
    F = ScalarField.root_of_unity(3)
    assert qbinom_lemma2(4, 3, F) == 1
    assert qbinom_lemma2(2, 3, F) == 0
    # m = -1 = 2 + (-1)*3 gives -(-1)^3 * (-1) = -1, matching (-1)^3 [3 choose 3]
    assert qbinom_lemma2(-1, 3, F) == -1
    assert qbinom(-1, 3, F) == -1


def test_lusztig_plain_rule_fails_at_even_order_roots():
    # q a primitive 6th root: [4 choose 1] = [4] = -1 while the digit product is 1
    F = ScalarField.root_of_unity(6)
    assert qbinom(4, 1, F) == -1
    assert lusztig_factorization(4, 1, 3, F) == 1
    assert lusztig_sign(4, 1, 3, F) == -1


@pytest.mark.parametrize("m", [3, 5, 6, 10])
def test_signed_digit_rule(m):
    F = ScalarField.root_of_unity(m)
    l = char_q(F)
    for M in range(0, 31):
        for r in range(M + 1):
            assert qbinom(M, r, F) == lusztig_factorization(M, r, l, F) * lusztig_sign(M, r, l, F)


@pytest.mark.parametrize("m", [3, 5, 6, 10])
def test_lemma3_predicate(m):
    F = ScalarField.root_of_unity(m)
    l = char_q(F)
    span = range(-3 * l, 3 * l)
    assert all(lemma3_holds(a, b, l, F) for a in span for b in span)


# --- oracle comparisons ----------------------------------------------------

def test_gaussian_oracles_agree():
    for m in range(9):
        for r in range(m + 1):
            assert gaussian_t(m, r) == gaussian_by_subsets(m, r)


@pytest.mark.parametrize("F", [G] + ROOTS, ids=str)
def test_qbinom_matches_oracle(F):
    for m in range(0, 16):
        for r in range(0, m + 1):
            assert scalar_at(qbinom(m, r, F), F) == oracle_at(laurent_qbinom(m, r), F), (m, r)


@pytest.mark.parametrize("F", [G] + ROOTS, ids=str)
def test_qint_matches_oracle(F):
    for n in range(-12, 13):
        assert scalar_at(qint(n, F), F) == oracle_at(laurent_qint(n), F)


def test_generic_values_at_two_points():
    for m in range(10):
        for r in range(m + 1):
            v = qbinom(m, r, G)
            assert v.evaluate(Q1) == oracle_at(laurent_qbinom(m, r), G, Q1)
            assert v.evaluate(1) == comb(m, r)


def test_qbinom_product_formula_generic():
    for m in range(-6, 10):
        for r in range(0, 6):
            assert qbinom_product(m, r, G) == qbinom(m, r, G), (m, r)


@pytest.mark.parametrize("m", range(3, 16))
def test_cyclotomic_polynomial_matches_oracle(m):
    assert list(cyclotomic_polynomial(m)) == cyclotomic(m)


def test_multi_qbinom_is_product():
    assert multi_qbinom((3, 2), (1, 1), G) == qbinom(3, 1, G) * qbinom(2, 1, G)


# --- field structure -------------------------------------------------------

def test_rational_function_canonical_form():
    x = (G.q ** 2 - 1) / (G.q - 1)
    assert x == G.q + 1
    assert isinstance(x, RationalFunction)
    y = G.one / (G.q * 2 + 4)
    den = y.den
    assert den.low() == 0
    assert dict(den.coeffs)[den.high()] == 1


def test_root_of_unity_order():
    for F in ROOTS:
        assert F.qpow(F.m) == 1
        assert all(F.qpow(d) != 1 for d in range(1, F.m))
        assert isinstance(F.q, CyclotomicElement)
        assert len(F.q.coeffs) == F.degree


def test_fields_are_interned_and_modes_validated():
    assert ScalarField.root_of_unity(6) is ScalarField.root_of_unity(6)
    assert ScalarField.generic() is G
    with pytest.raises(ValueError):
        ScalarField.root_of_unity(2)
    with pytest.raises(ValueError):
        G.one + ScalarField.root_of_unity(3).one


def test_mixed_arithmetic_with_rationals():
    assert G.q * 2 == G.q + G.q
    assert 1 - G.one == 0
    assert Fraction(1, 2) * G.q * 2 == G.q
    assert (3 / (G.q + 1)) * (G.q + 1) == 3


def test_bar_involution():
    x = (G.q ** 3 + 2) / (G.q - 5)
    assert x.bar().bar() == x
    assert x.bar().evaluate(Q0) == x.evaluate(1 / Q0)
    F = ScalarField.root_of_unity(7)
    assert F.qpow(2).bar() == F.qpow(-2)


def test_render_and_parse_round_trip():
    for F in (G, ScalarField.root_of_unity(5), ScalarField.root_of_unity(6)):
        for x in (qint(3, F), qbinom(5, 2, F), F.qpow(-3) * Fraction(-3, 2), (F.q + 2) / (F.q - 3)):
            assert F.parse(str(x)) == x
    assert str(qint(3, G)) == "q^2 + 1 + q^-2"


def test_laurent_poly_is_sparse():
    p = LaurentPoly({3: 1, 0: 0, -1: 2}) + LaurentPoly({3: -1})
    assert dict(p.coeffs) == {-1: 2}
    assert LaurentPoly({1: 1, -1: 1}).evaluate(1) == 2


# --- properties ------------------------------------------------------------

laurent = st.dictionaries(st.integers(-4, 4), st.fractions(max_denominator=5).filter(bool), max_size=4)


def scalar(F):
    return st.tuples(laurent, laurent).map(
        lambda p: F.from_laurent(p[0]) / F.from_laurent(p[1]) if p[1] else F.from_laurent(p[0]))


@pytest.mark.parametrize("F", [G, ScalarField.root_of_unity(5), ScalarField.root_of_unity(12)], ids=str)
def test_field_axioms(F):
    @settings(max_examples=100, deadline=None)
    @given(scalar(F), scalar(F), scalar(F))
    def run(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a - a == 0
        if not a.is_zero():
            assert a / a == 1
            assert a * a.inverse() == 1

    run()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 14), st.integers(0, 14))
def test_symmetry_and_bar_invariance(m, r):
    if r > m:
        m, r = r, m
    v = qbinom(m, r, G)
    assert v == qbinom(m, m - r, G)
    assert v.bar() == v


@settings(max_examples=60, deadline=None)
@given(st.integers(-12, -1), st.integers(0, 8))
def test_negative_upper_index(m, r):
    assert qbinom(m, r, G) == (-1) ** r * qbinom(-m + r - 1, r, G)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 40))
def test_qint_at_one_is_n(n):
    assert qint(n, G).evaluate(1) == n
