import pytest

from qdivpow.galg import AlgebraKind, monomial
from qdivpow.ops import Named, Scaled, is_zero_op, ops_equal, qbracket
from qdivpow.qarith import ScalarField, qint
from qdivpow.uq import (RootVectorSet, UqRealization, cartan, check_closed_forms, check_module_algebra,
                        check_nilpotency, check_rootvector_closed_forms, check_uq_relations, default_kind,
                        lusztig_rootvector_recursion, positive_root_order, root_vector, verify_rootvector_identities)

G = ScalarField.generic()
R3 = ScalarField.root_of_unity(3)
DIV = AlgebraKind.divided()
EXT = AlgebraKind.exterior()


def m(a, c=1, F=G, kind=DIV):
    return monomial(kind, F, a, c)


def test_generator_actions_match_closed_forms():
    R = UqRealization(3, G)
    b = (1, 2, 0)
    assert R.e(1).apply(m(b)) == m((2, 1, 0), qint(2, G))
    assert R.f(1).apply(m(b)) == m((0, 3, 0), qint(3, G))
    assert R.K(1).apply(m(b)) == m(b, G.qpow(-1))
    assert check_closed_forms(R, 5).ok


def test_commutator_example():
    R = UqRealization(2, G)
    v = m((2, 0))
    lhs = R.e(1).apply(R.f(1).apply(v)) - R.f(1).apply(R.e(1).apply(v))
    assert lhs == v.scale(qint(2, G))
    assert lhs == v.scale((G.qpow(2) - G.qpow(-2)) / (G.q - G.qpow(-1)))


def test_serre_and_distant_commutation():
    R = UqRealization(4, G)
    e1, e2, e3 = R.e(1), R.e(2), R.e(3)
    serre = e1 * e1 * e2 - (G.q + G.qpow(-1)) * (e1 * e2 * e1) + e2 * e1 * e1
    assert is_zero_op(serre, DIV, G, 4, 5).ok
    assert is_zero_op(e1 * e3 - e3 * e1, DIV, G, 4, 5).ok


def test_cartan_matrix():
    assert [cartan(1, j) for j in (1, 2, 3)] == [2, -1, 0]


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("F", [G, R3, ScalarField.root_of_unity(5), ScalarField.root_of_unity(6)], ids=str)
def test_relations_and_module_algebra(n, F):
    R = UqRealization(n, F, gl=True)
    for rep in (check_uq_relations(R, 5), check_module_algebra(R, 5)):
        assert rep.ok, rep.render()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_exterior_realization(n):
    R = UqRealization(n, G, EXT, gl=True)
    for rep in (check_uq_relations(R, n), check_module_algebra(R, n)):
        assert rep.ok, rep.render()
    for i in range(1, n):
        assert is_zero_op(R.e(i) * R.e(i), EXT, G, n).ok
        assert is_zero_op(R.f(i) * R.f(i), EXT, G, n).ok


def test_exterior_action_values():
    R = UqRealization(3, G, EXT, gl=True)
    v = monomial(EXT, G, (0, 1, 0))
    assert R.e(1).apply(v) == monomial(EXT, G, (1, 0, 0))
    assert R.K(1).apply(monomial(EXT, G, (1, 1, 0))) == monomial(EXT, G, (1, 1, 0))
    assert R.k(3).apply(monomial(EXT, G, (1, 1, 1))) == monomial(EXT, G, (1, 1, 1), G.q)


def test_nilpotency_on_restricted():
    R = UqRealization(2, R3, AlgebraKind.restricted(3))
    assert check_nilpotency(R).ok
    assert not is_zero_op(R.e(1) * R.e(1), R.kind, R3, 2).ok


def test_default_kind_and_errors():
    assert default_kind(G) == DIV
    assert default_kind(R3) == AlgebraKind.restricted(3)
    with pytest.raises(ValueError):
        UqRealization(1, G)
    with pytest.raises(ValueError):
        UqRealization(2, G).e(2)
    with pytest.raises(ValueError):
        UqRealization(2, G).k(1)


class _ScaledE(UqRealization):
    """Realization with e_1 off by a factor q; the relations must notice."""

    def e(self, i):
        op = super().e(i)
        return Named(f"q e{i}", Scaled(self.field.q, op)) if i == 1 else op


def test_broken_realization_is_detected():
    R = _ScaledE(3, G, gl=True)
    assert not check_uq_relations(R, 4).ok
    assert not check_closed_forms(R, 4).ok


def test_root_vector_examples():
    rv = RootVectorSet(3, G)
    assert rv.e(1, 3).apply(m((1, 1, 1))) == m((2, 1, 0), qint(2, G) * G.qpow(-1))
    assert rv.e(3, 1).apply(m((1, 1, 1))) == m((0, 1, 2), qint(2, G) * G.q)
    assert ops_equal(rv.e(1, 2), rv.realization.e(1), DIV, G, 3, 6).ok
    assert ops_equal(rv.e(2, 1), rv.realization.f(1), DIV, G, 3, 6).ok
    assert root_vector(1, 3, rv) is rv.e(1, 3)
    with pytest.raises(ValueError):
        rv.e(2, 2)
    with pytest.raises(ValueError):
        RootVectorSet(3, G, EXT)


def test_q_bracket_examples():
    rv = RootVectorSet(3, G)
    assert ops_equal(qbracket(rv.e(1, 2), rv.e(2, 3), G), rv.e(1, 3), DIV, G, 3, 6).ok
    assert ops_equal(qbracket(rv.e(3, 2), rv.e(2, 1), G, -1), rv.e(3, 1), DIV, G, 3, 6).ok
    a = rv.e(1, 3)
    assert ops_equal(qbracket(a, a, G), (1 - G.q) * (a * a), DIV, G, 3, 5).ok


def test_rootvector_identities():
    for n in (3, 4):
        rv = RootVectorSet(n, G)
        assert check_rootvector_closed_forms(rv, 5).ok
        rep = verify_rootvector_identities(rv, 5)
        assert rep.ok, rep.render()


def test_k_independence_at_n4():
    rv = RootVectorSet(4, G)
    via2 = qbracket(rv.e(1, 2), rv.e(2, 4), G)
    via3 = qbracket(rv.e(1, 3), rv.e(3, 4), G)
    assert ops_equal(via2, via3, DIV, G, 4, 5).ok
    assert ops_equal(via2, rv.e(1, 4), DIV, G, 4, 5).ok


def test_braid_twisting_example():
    rv = RootVectorSet(3, G)
    R = rv.realization
    assert ops_equal(qbracket(rv.e(1, 3), -(R.f(1) * R.K(1, -1)), G), rv.e(2, 3), DIV, G, 3, 6).ok


def test_recursion():
    assert positive_root_order(4) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    out = lusztig_rootvector_recursion(3, G)
    assert ops_equal(out[(1, 3)], qbracket(UqRealization(3, G).e(1), UqRealization(3, G).e(2), G), DIV, G, 3, 5).ok
    assert ops_equal(out[(2, 3)], UqRealization(3, G).e(2), DIV, G, 3, 5).ok
    assert len(lusztig_rootvector_recursion(4, G, degree_bound=5)) == 12
    assert len(lusztig_rootvector_recursion(3, R3, AlgebraKind.restricted(3))) == 6
