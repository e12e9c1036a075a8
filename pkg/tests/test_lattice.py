import pytest
from hypothesis import given, settings, strategies as st

from qdivpow import lattice as lat
from qdivpow.qarith import ScalarField

G = ScalarField.generic()


def brute_star(a, b):
    return sum(a[i] * b[j] for i in range(len(a)) for j in range(len(b)) if i > j)


def vecs(n, lo=-5, hi=5):
    return st.tuples(*[st.integers(lo, hi)] * n)


def triples():
    return st.integers(1, 4).flatmap(lambda n: st.tuples(vecs(n), vecs(n), vecs(n)))


def test_star_values():
    assert lat.star(lat.eps(2, 2), lat.eps(1, 2)) == 1
    assert lat.star(lat.eps(1, 2), lat.eps(2, 2)) == 0
    assert lat.star((1, 2, 3), (4, 5, 6)) == 35


def test_theta_values():
    assert lat.theta(lat.eps(1, 2), lat.eps(2, 2), G) == G.qpow(-1)
    assert lat.theta((3, -1, 2), (3, -1, 2), G) == 1
    assert lat.theta((1, 2), (3, 4), G) == G.qpow(2)


def test_inner_values():
    assert lat.inner(lat.eps(1, 2), lat.eps(1, 2)) == 1
    assert lat.inner(lat.eps(1, 2), lat.eps(2, 2)) == 0
    assert lat.inner(lat.fundamental_weight(2, 3), lat.simple_root(1, 3)) == 0
    assert lat.fundamental_weight(2, 3) == (1, 1, 0)
    assert lat.simple_root(1, 3) == (1, -1, 0)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        lat.star((1, 2), (1, 2, 3))
    with pytest.raises(ValueError):
        lat.add((1,), (1, 2))


def test_multi_index_enumeration():
    assert list(lat.multi_indices(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(lat.multi_indices(3, 4, 2))) == 6
    assert len(list(lat.box(3, 2))) == 27
    assert len(list(lat.multi_indices_upto(3, 3))) == 20


@settings(max_examples=200, deadline=None)
@given(triples())
def test_star_matches_double_sum_and_is_biadditive(t):
    a, b, c = t
    assert lat.star(a, b) == brute_star(a, b)
    assert lat.star(lat.add(a, b), c) == lat.star(a, c) + lat.star(b, c)
    assert lat.star(a, lat.add(b, c)) == lat.star(a, b) + lat.star(a, c)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), vecs(n))))
def test_star_closed_forms(p):
    n, b = p
    for i in range(1, n + 1):
        e = lat.eps(i, n)
        assert lat.star(e, b) == sum(b[:i - 1])
        assert lat.star(b, e) == sum(b[i:])
    for i in range(1, n):
        a = lat.simple_root(i, n)
        assert lat.star(a, b) == -b[i - 1]
        assert lat.star(b, a) == b[i]


@settings(max_examples=200, deadline=None)
@given(triples())
def test_theta_bicharacter_and_cocycle(t):
    a, b, c = t
    th = lambda x, y: lat.theta(x, y, G)
    z = lat.zero(len(a))
    assert th(lat.add(a, b), c) == th(a, c) * th(b, c)
    assert th(a, lat.add(b, c)) == th(a, b) * th(a, c)
    assert th(a, z) == 1 == th(z, a)
    assert th(a, b) * th(b, a) == 1 == th(a, a)
    assert th(a, b) * th(lat.add(a, b), c) == th(b, c) * th(a, lat.add(b, c))
