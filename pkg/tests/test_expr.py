import pytest
from hypothesis import given, settings, strategies as st

from qdivpow.galg import AlgebraKind, Element, monomial
from qdivpow.ops import Del, MulBy, Sigma, ops_equal
from qdivpow.expr import ParseError, Session, parse, parse_element, parse_operator, parse_scalar, parse_weyl, tokenize
from qdivpow.qarith import ScalarField, qint
from qdivpow.weyl import WeylEngine

G = ScalarField.generic()
R3 = ScalarField.root_of_unity(3)
DIV = AlgebraKind.divided()
S2 = Session(2, G)


def test_scalars():
    assert parse_scalar("q^2 + 1/q", G) == G.qpow(2) + G.qpow(-1)
    assert parse_scalar("(q^2-q^-2)/(q-q^-1)", G) == qint(2, G)
    assert parse_scalar("q^3", R3) == R3.one
    assert parse_scalar("-3/4", G) == G.from_rational(-3) / 4


def test_elements():
    assert parse_element("x(1,2)", S2) == monomial(DIV, G, (1, 2))
    assert parse_element("x1^2", S2) == monomial(DIV, G, (2, 0), qint(2, G))
    assert parse_element("x2*x1", S2) == monomial(DIV, G, (1, 1), G.q)
    assert parse_element("q*x(1,0) - x(1,0)", S2) == monomial(DIV, G, (1, 0), G.q - 1)


def test_operator_application():
    assert parse_operator("e1", S2).apply(parse_element("x(1,2)", S2)) == monomial(DIV, G, (2, 1), qint(2, G))
    assert isinstance(parse("mul x(1,0)", S2), MulBy)


def test_semicolon_is_application_order():
    a = parse_operator("d1; s1", S2)
    b = parse_operator("s1*d1", S2)
    assert ops_equal(a, b, DIV, G, 2, 5).ok
    assert ops_equal(a, Sigma(1) * Del(1), DIV, G, 2, 5).ok
    assert not ops_equal(a, Del(1) * Sigma(1), DIV, G, 2, 5).ok


def test_weyl_words():
    eng = WeylEngine(2, G, 1)
    w = parse_weyl("x(1,0); d1", S2)
    assert w == eng.normalize([Del(1), MulBy((1, 0))])
    assert str(w) == "s1^-1 + q*(d1; x(1,0))"


@pytest.mark.parametrize("text,col", [("x(1,", 5), ("s1 +", 5), ("q ^ x", 5), ("[3]", 1), ("s3", 1)])
def test_error_columns(text, col):
    with pytest.raises(ParseError) as ei:
        parse(text, S2)
    assert ei.value.column == col
    assert ei.value.text == text


def test_type_errors_are_parse_errors():
    with pytest.raises(ParseError):
        parse_element("s1", S2)
    with pytest.raises(ParseError):
        parse_scalar("x1", G)


def test_tokenize_offsets():
    toks = tokenize("s1 + x(2,3)")
    assert [(t.kind, t.text, t.pos) for t in toks[:3]] == [("NAME", "s", 0), ("OP", "+", 3), ("NAME", "x", 5)]
    assert toks[0].index == 1
    assert toks[-1].kind == "END"


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), max_size=4))
def test_element_round_trip(terms):
    e = Element.zero(DIV, G, 2)
    for a, c in terms.items():
        e = e + monomial(DIV, G, a, G.qpow(c) + c)
    assert parse_element(str(e), S2) == e


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
def test_scalar_round_trip_at_root(cs):
    F = ScalarField.root_of_unity(5)
    v = F.zero
    for k, c in enumerate(cs):
        v = v + F.qpow(k) * c
    assert parse_scalar(str(v), F) == v


def test_root_vector_symbols():
    s3 = Session(3, G)
    assert ops_equal(parse_operator("E(1,3)", s3), MulBy((1, 0, 0)) * Del(3), DIV, G, 3, 4).ok
    assert ops_equal(parse_operator("e(1,2)", s3), parse_operator("e1", s3), DIV, G, 3, 4).ok
