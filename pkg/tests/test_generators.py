from fractions import Fraction as F

import pytest

from tdkit.field import rat
from tdkit.generators import DG_KRAWTCHOUK, hermite_fixture, krawtchouk_pair, paper_4x4, uq_sl2_forbidden, uq_sl2_pair
from tdkit.linalg import Mat
from tdkit.relations import ParamSeq
from tdkit.spectral import fit_closed_form, is_geometric_progression, verify_td_pair


def test_four_by_four_fixture_literal():
    g = paper_4x4()
    assert g.A.tolist() == [[0, 3, 0, 0], [1, 0, 2, 0], [0, 2, 0, 1], [0, 0, 3, 0]]
    assert g.Astar == Mat.diag([3, 1, -1, -3])
    assert g.witness.tolist() == [[1, 3, 3, 1], [1, 1, -1, -1], [1, -1, -1, 1], [1, -3, 3, -1]]


def test_krawtchouk_three_is_displayed_pair():
    g, p = krawtchouk_pair(3), paper_4x4()
    assert (g.A, g.Astar, g.witness) == (p.A, p.Astar, p.witness)


def test_krawtchouk_one():
    g = krawtchouk_pair(1)
    assert g.A == Mat([[0, 1], [1, 0]])
    assert g.Astar == Mat.diag([1, -1])
    assert g.witness == Mat([[1, 1], [1, -1]])
    assert g.witness @ g.witness == 2 * Mat.identity(2)
    assert g.expected_params is None


@pytest.mark.parametrize("d", range(1, 9))
def test_krawtchouk_witness(d):
    g = krawtchouk_pair(d)
    P = g.witness
    assert P @ P == 2**d * Mat.identity(d + 1)
    assert g.A @ P == P @ g.Astar
    r = verify_td_pair(g.A, g.Astar)
    assert r.is_leonard_pair
    assert r.eig_seq == tuple(d - 2 * i for i in range(d + 1))
    if d >= 3:
        cf = fit_closed_form(r.eig_seq)
        assert (cf.case, cf.a, cf.b, cf.c) == ("II", d, -2, 0)


def test_krawtchouk_rejects_zero():
    with pytest.raises(ValueError):
        krawtchouk_pair(0)


def test_uq_forbidden_values():
    assert uq_sl2_forbidden(2, 2) == [2, F(1, 2)]
    assert uq_sl2_forbidden(3, 2) == [4, 1, F(1, 4)]


def test_uq_examples():
    g = uq_sl2_pair(0, 1, 2, 1, 1)
    assert g.A == Mat([[F(2, 3)]]) and g.Astar == Mat([[F(2, 3)]])
    assert verify_td_pair(g.A, g.Astar).is_leonard_pair
    g = uq_sl2_pair(2, 1, 2, 1, 1)
    assert verify_td_pair(g.A, g.Astar).is_leonard_pair
    with pytest.raises(ValueError):
        uq_sl2_pair(2, 1, 2, 1, F(1, 2))


@pytest.mark.parametrize("bad", [dict(eps=2), dict(p=1), dict(p=0), dict(alpha=0), dict(d=-1)])
def test_uq_precondition_errors(bad):
    kw = dict(d=3, eps=1, p=2, alpha=1, alpha_star=2)
    kw.update(bad)
    with pytest.raises(ValueError):
        uq_sl2_pair(**kw)


@pytest.mark.parametrize("d", range(0, 7))
@pytest.mark.parametrize("p", [2, 3, F(1, 2)])
@pytest.mark.parametrize("eps, alpha, alpha_star", [(1, 1, F(2, 5)), (-1, 2, F(1, 7)), (1, F(-2, 3), 5)])
def test_uq_family(d, p, eps, alpha, alpha_star):
    g = uq_sl2_pair(d, eps, p, alpha, alpha_star)
    p = rat(p)
    assert all(g.A[i, j] == 0 for i in range(d + 1) for j in range(d + 1) if j > i)
    assert all(g.Astar[i, j] == 0 for i in range(d + 1) for j in range(d + 1) if j < i)
    diag = [g.A[i, i] for i in range(d + 1)]
    assert diag == [eps * p ** (d - 2 * i) / (p - 1 / p) for i in range(d + 1)]
    assert is_geometric_progression([x / diag[0] for x in diag], p**-2)
    r = verify_td_pair(g.A, g.Astar)
    assert r.is_leonard_pair
    if d >= 3:
        assert r.params.particular == g.expected_params == ParamSeq(p * p + p**-2, 0, 0, 0, 0)


def test_hermite_fixture_params():
    assert hermite_fixture().params == ParamSeq(2, 0, 0, 0, 1)
    assert DG_KRAWTCHOUK == ParamSeq(2, 0, 0, 4, 4)
